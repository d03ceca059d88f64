#include "decoc/trajectory.hpp"

#include <cmath>

#include "decoc/errors.hpp"
#include "decoc/format.hpp"

namespace decoc {

Quintic solve_quintic(double p0, double v0, double a0, double p1, double v1,
                      double a1, double T) {
  if (!(T > 0.0)) {
    throw NonPositiveDuration("quintic duration must be positive, got " + format_double(T));
  }
  const double c0 = p0;
  const double c1 = v0;
  const double c2 = 0.5 * a0;

  // Residual boundary values once the free-coefficient part is subtracted.
  const double b1 = p1 - (c0 + c1 * T + c2 * T * T);
  const double b2 = v1 - (c1 + 2.0 * c2 * T);
  const double b3 = a1 - 2.0 * c2;

  const double T2 = T * T;
  const double T3 = T2 * T;
  const double T4 = T3 * T;
  const double T5 = T4 * T;

  Quintic q;
  q.c = {c0,
         c1,
         c2,
         (20.0 * b1 - 8.0 * b2 * T + b3 * T2) / (2.0 * T3),
         (-30.0 * b1 + 14.0 * b2 * T - 2.0 * b3 * T2) / (2.0 * T4),
         (12.0 * b1 - 6.0 * b2 * T + b3 * T2) / (2.0 * T5)};
  return q;
}

double curvature_at(double vx, double vy, double ax, double ay) {
  const double speed_sq = vx * vx + vy * vy;
  if (speed_sq <= kSpeedEpsilon * kSpeedEpsilon) return 0.0;
  return (vx * ay - vy * ax) / (speed_sq * std::sqrt(speed_sq));
}

Trajectory action_to_trajectory(const VehicleState& s, const Action& a,
                                double T, double dt) {
  if (!(T > 0.0) || !(dt > 0.0)) {
    throw NonPositiveDuration("trajectory needs T > 0 and dt > 0, got T=" +
                              format_double(T) + " dt=" + format_double(dt));
  }
  if (dt > T + 1e-12) {
    throw NonPositiveDuration("sample step dt=" + format_double(dt) +
                              " exceeds duration T=" + format_double(T));
  }
  const double v1 = s.vx + a.dv;
  if (v1 < 0.0) {
    throw NegativeTerminalSpeed("terminal speed " + format_double(v1) +
                                " < 0 (dv=" + format_double(a.dv) + ")");
  }

  Trajectory traj;
  traj.source_action = a;
  traj.dt = dt;
  traj.quintics.duration = T;
  traj.quintics.x = solve_quintic(s.x, s.vx, s.ax, s.x + 0.5 * (s.vx + v1) * T, v1, 0.0, T);
  traj.quintics.y = solve_quintic(s.y, s.vy, s.ay, s.y + a.dy, 0.0, 0.0, T);

  const std::size_t expected = static_cast<std::size_t>(T / dt) + 2;
  traj.points.reserve(expected);

  double heading = s.heading;
  auto sample_at = [&](double t) {
    TrajectoryPoint pt;
    pt.t = t;
    pt.state.x = traj.quintics.x.value(t);
    pt.state.y = traj.quintics.y.value(t);
    pt.state.vx = traj.quintics.x.deriv1(t);
    pt.state.vy = traj.quintics.y.deriv1(t);
    pt.state.ax = traj.quintics.x.deriv2(t);
    pt.state.ay = traj.quintics.y.deriv2(t);
    const double speed_sq = pt.state.vx * pt.state.vx + pt.state.vy * pt.state.vy;
    if (speed_sq > kSpeedEpsilon * kSpeedEpsilon) {
      heading = std::atan2(pt.state.vy, pt.state.vx);
    }
    pt.state.heading = heading;
    pt.curvature = curvature_at(pt.state.vx, pt.state.vy, pt.state.ax, pt.state.ay);
    traj.points.push_back(pt);
  };

  for (std::size_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * dt;
    if (t >= T - 1e-9) break;
    sample_at(t);
  }
  sample_at(T);  // final sample exactly at the duration
  return traj;
}

}  // namespace decoc
