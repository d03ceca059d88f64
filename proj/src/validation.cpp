#include "decoc/validation.hpp"

#include <cmath>

#include "decoc/errors.hpp"
#include "decoc/format.hpp"

namespace decoc {

namespace {

// Half extent of box `b` projected onto unit axis (ux, uy).
double projected_radius(const OrientedBox& b, double ux, double uy) {
  const double c = std::cos(b.heading);
  const double s = std::sin(b.heading);
  return b.half_length * std::abs(ux * c + uy * s) +
         b.half_width * std::abs(-ux * s + uy * c);
}

bool separated_on_axis(const OrientedBox& a, const OrientedBox& b, double ux, double uy) {
  const double d = std::abs((b.cx - a.cx) * ux + (b.cy - a.cy) * uy);
  return d > projected_radius(a, ux, uy) + projected_radius(b, ux, uy);
}

void require_matching_grids(const Trajectory& a, const Trajectory& b) {
  if (a.points.size() != b.points.size()) {
    throw MismatchedSampling("trajectories have " + std::to_string(a.points.size()) +
                             " vs " + std::to_string(b.points.size()) + " samples");
  }
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    if (std::abs(a.points[i].t - b.points[i].t) > 1e-9) {
      throw MismatchedSampling("sample " + std::to_string(i) + " at t=" +
                               format_double(a.points[i].t) + " vs t=" +
                               format_double(b.points[i].t));
    }
  }
}

}  // namespace

bool boxes_overlap(const OrientedBox& a, const OrientedBox& b) {
  // Cheap circle reject before the axis tests.
  const double dx = b.cx - a.cx;
  const double dy = b.cy - a.cy;
  const double ra = std::hypot(a.half_length, a.half_width);
  const double rb = std::hypot(b.half_length, b.half_width);
  if (dx * dx + dy * dy > (ra + rb) * (ra + rb)) return false;

  const double ca = std::cos(a.heading), sa = std::sin(a.heading);
  const double cb = std::cos(b.heading), sb = std::sin(b.heading);
  if (separated_on_axis(a, b, ca, sa)) return false;
  if (separated_on_axis(a, b, -sa, ca)) return false;
  if (separated_on_axis(a, b, cb, sb)) return false;
  if (separated_on_axis(a, b, -sb, cb)) return false;
  return true;  // touching counts as overlap
}

OrientedBox footprint(const VehicleState& s, const VehicleParams& p) {
  return OrientedBox{s.x, s.y, 0.5 * p.length, 0.5 * p.width, s.heading};
}

ValidationResult validate_drivability(const Trajectory& traj, const VehicleParams& p) {
  ValidationResult r;
  const double kappa_max = 1.0 / p.min_turn_radius;
  double prev_kappa = 0.0;
  double prev_t = 0.0;
  for (std::size_t i = 0; i < traj.points.size(); ++i) {
    const TrajectoryPoint& pt = traj.points[i];
    const double kappa = pt.curvature;
    bool ok = std::abs(kappa) <= kappa_max &&
              std::abs(std::atan(p.wheelbase * kappa)) <= p.max_steering_angle &&
              pt.state.ax >= p.ax_min && pt.state.ax <= p.ax_max &&
              std::abs(pt.state.ay) <= p.a_lat_max;
    if (i > 0) {
      ok = ok && std::abs(kappa - prev_kappa) <= p.kappa_rate_max * (pt.t - prev_t);
    }
    if (!ok) {
      r.valid_action = false;
      r.note_violation(pt.t);
      break;  // ascending scan, so this is the earliest violation
    }
    prev_kappa = kappa;
    prev_t = pt.t;
  }
  return r;
}

std::optional<double> first_off_road_time(const Trajectory& traj, const RoadModel& road,
                                          const VehicleParams& p) {
  const double w = road.width();
  const double hl = 0.5 * p.length;
  const double hw = 0.5 * p.width;
  for (const TrajectoryPoint& pt : traj.points) {
    // Lateral extent of the rotated footprint; the corridor is closed, so a
    // corner exactly on the edge still counts as inside.
    const double extent = hl * std::abs(std::sin(pt.state.heading)) +
                          hw * std::abs(std::cos(pt.state.heading));
    if (pt.state.y - extent < 0.0 || pt.state.y + extent > w) return pt.t;
  }
  return std::nullopt;
}

bool check_on_road(const Trajectory& traj, const RoadModel& road, const VehicleParams& p) {
  return !first_off_road_time(traj, road, p).has_value();
}

std::optional<double> first_collision_time(const Trajectory& traj_a, const Trajectory& traj_b,
                                           const VehicleParams& pa, const VehicleParams& pb) {
  require_matching_grids(traj_a, traj_b);
  for (std::size_t i = 0; i < traj_a.points.size(); ++i) {
    if (boxes_overlap(footprint(traj_a.points[i].state, pa),
                      footprint(traj_b.points[i].state, pb))) {
      return traj_a.points[i].t;
    }
  }
  return std::nullopt;
}

bool check_collision(const Trajectory& traj_a, const Trajectory& traj_b,
                     const VehicleParams& pa, const VehicleParams& pb) {
  return first_collision_time(traj_a, traj_b, pa, pb).has_value();
}

}  // namespace decoc
