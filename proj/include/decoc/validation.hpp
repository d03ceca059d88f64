#ifndef DECOC_VALIDATION_HPP
#define DECOC_VALIDATION_HPP

#include <optional>

#include "decoc/road.hpp"
#include "decoc/trajectory.hpp"

namespace decoc {

/// Kinematic and dynamic limits of one vehicle.
struct VehicleParams {
  double length = 4.5;              // m
  double width = 1.9;               // m
  double wheelbase = 2.7;           // m
  double max_steering_angle = 0.6;  // rad
  double min_turn_radius = 11.0;    // m
  double ax_min = -8.0;             // m/s^2 (braking, negative)
  double ax_max = 4.0;              // m/s^2
  double a_lat_max = 6.0;           // m/s^2
  double kappa_rate_max = 0.5;      // (1/m)/s, curvature-continuity proxy
};

/// Outcome of validating one agent's transition.
struct ValidationResult {
  bool valid_state = true;   // footprint stayed on the drivable corridor
  bool valid_action = true;  // kinematics and dynamics within limits
  bool collision = false;
  std::optional<double> first_violation_time;  // earliest violating sample (s)

  bool fully_valid() const { return valid_state && valid_action && !collision; }

  /// Records a violation time, keeping the earliest.
  void note_violation(double t) {
    if (!first_violation_time || t < *first_violation_time) first_violation_time = t;
  }
};

/// Axis-aligned-in-body rectangle at (cx, cy) rotated by heading.
struct OrientedBox {
  double cx = 0.0;
  double cy = 0.0;
  double half_length = 0.0;
  double half_width = 0.0;
  double heading = 0.0;
};

/// Separating-axis overlap test for two oriented rectangles. Exact touching
/// counts as overlap (closed rectangles).
bool boxes_overlap(const OrientedBox& a, const OrientedBox& b);

/// Footprint of a vehicle state under the given dimensions.
OrientedBox footprint(const VehicleState& s, const VehicleParams& p);

/// Checks curvature, steering angle, turn radius, longitudinal and lateral
/// acceleration bounds plus the per-sample curvature-rate proxy. Fills the
/// valid_action flag and the earliest violation time.
ValidationResult validate_drivability(const Trajectory& traj, const VehicleParams& p);

/// True iff the vehicle's oriented rectangle stays inside the corridor
/// 0 <= y <= road width at every sample (closed boundary; the road is not
/// bounded longitudinally). Corridor containment only depends on the lateral
/// coordinate, so this is frame-independent for mirrored agents.
bool check_on_road(const Trajectory& traj, const RoadModel& road, const VehicleParams& p);

/// Earliest sample at which the footprint leaves the corridor, if any.
std::optional<double> first_off_road_time(const Trajectory& traj, const RoadModel& road,
                                          const VehicleParams& p);

/// True iff the two vehicles' rectangles overlap at some common sample time.
/// Throws MismatchedSampling if the time grids differ.
bool check_collision(const Trajectory& traj_a, const Trajectory& traj_b,
                     const VehicleParams& pa, const VehicleParams& pb);

std::optional<double> first_collision_time(const Trajectory& traj_a, const Trajectory& traj_b,
                                           const VehicleParams& pa, const VehicleParams& pb);

}  // namespace decoc

#endif  // DECOC_VALIDATION_HPP
