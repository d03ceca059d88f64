#ifndef DECOC_TYPES_HPP
#define DECOC_TYPES_HPP

namespace decoc {

/// Full kinematic state of one agent in its own driving frame
/// (x grows in the driving direction, vx >= 0; reverse motion is out of scope).
struct VehicleState {
  double x = 0.0;        // longitudinal position (m)
  double y = 0.0;        // lateral position (m)
  double vx = 0.0;       // longitudinal velocity (m/s)
  double vy = 0.0;       // lateral velocity (m/s)
  double ax = 0.0;       // longitudinal acceleration (m/s^2)
  double ay = 0.0;       // lateral acceleration (m/s^2)
  double heading = 0.0;  // orientation (rad), atan2(vy, vx) above the speed epsilon
};

/// Continuous action: desired change of state over one action duration.
struct Action {
  double dv = 0.0;  // longitudinal velocity change (m/s)
  double dy = 0.0;  // lateral position change (m)

  friend bool operator==(const Action& a, const Action& b) {
    return a.dv == b.dv && a.dy == b.dy;
  }
};

}  // namespace decoc

#endif  // DECOC_TYPES_HPP
