#ifndef DECOC_TRAJECTORY_HPP
#define DECOC_TRAJECTORY_HPP

#include <array>
#include <vector>

#include "decoc/types.hpp"

namespace decoc {

/// Below this speed heading and curvature are degenerate; heading is carried
/// over from the previous sample and curvature reports 0.
inline constexpr double kSpeedEpsilon = 0.1;  // m/s

/// Single-axis degree-5 polynomial p(t) = c0 + c1 t + ... + c5 t^5.
struct Quintic {
  std::array<double, 6> c{};

  double value(double t) const {
    return c[0] + t * (c[1] + t * (c[2] + t * (c[3] + t * (c[4] + t * c[5]))));
  }
  double deriv1(double t) const {
    return c[1] + t * (2 * c[2] + t * (3 * c[3] + t * (4 * c[4] + t * 5 * c[5])));
  }
  double deriv2(double t) const {
    return 2 * c[2] + t * (6 * c[3] + t * (12 * c[4] + t * 20 * c[5]));
  }
  double deriv3(double t) const {
    return 6 * c[3] + t * (24 * c[4] + t * 60 * c[5]);
  }
};

/// Longitudinal/lateral quintic pair spanning one action duration.
struct QuinticPair {
  Quintic x;        // longitudinal axis
  Quintic y;        // lateral axis
  double duration = 0.0;  // t1 - t0 (s)
};

struct TrajectoryPoint {
  double t = 0.0;  // time offset from t0 (s)
  VehicleState state;
  double curvature = 0.0;  // kappa (1/m)
};

/// Time-sampled motion generated from one action. Points are strictly
/// increasing in t; the first point is at t = 0 and the last exactly at
/// t = duration.
struct Trajectory {
  std::vector<TrajectoryPoint> points;
  Action source_action;
  QuinticPair quintics;
  double dt = 0.0;  // nominal sample step used to generate the points

  const VehicleState& initial_state() const { return points.front().state; }
  const VehicleState& terminal_state() const { return points.back().state; }
  double duration() const { return quintics.duration; }
};

/// Solves the two-point boundary value problem for a quintic polynomial:
/// position/velocity/acceleration (p0, v0, a0) at t = 0 and (p1, v1, a1) at
/// t = T. Closed-form solution of the normalized boundary system.
/// Throws NonPositiveDuration if T <= 0.
Quintic solve_quintic(double p0, double v0, double a0, double p1, double v1,
                      double a1, double T);

/// kappa = (vx*ay - vy*ax) / (vx^2 + vy^2)^(3/2); 0 at or below the speed
/// epsilon. Total function.
double curvature_at(double vx, double vy, double ax, double ay);

/// Builds the jerk-minimal trajectory realizing action `a` from state `s`
/// over duration T, sampled every dt (the final sample is placed exactly at
/// T). Terminal conditions: vx(T) = vx(0) + dv, ax(T) = 0, y(T) = y(0) + dy,
/// vy(T) = 0, ay(T) = 0, and x(T) = x(0) + (vx(0) + vx(T))/2 * T.
/// Throws NonPositiveDuration, NegativeTerminalSpeed.
Trajectory action_to_trajectory(const VehicleState& s, const Action& a,
                                double T, double dt);

}  // namespace decoc

#endif  // DECOC_TRAJECTORY_HPP
