#ifndef DECOC_REWARD_HPP
#define DECOC_REWARD_HPP

#include <span>

#include "decoc/road.hpp"
#include "decoc/trajectory.hpp"
#include "decoc/validation.hpp"

namespace decoc {

/// Weights of the immediate reward terms. Weights are non-negative; the
/// validation penalties are stored as the (negative) values added when the
/// corresponding flag is set.
struct RewardWeights {
  double w_v = 1.0;           // velocity deviation
  double w_lane = 5.0;        // desired-lane deviation
  double w_center = 0.5;      // lane-center offset
  double w_ax = 0.2;          // integral of squared longitudinal acceleration
  double w_ay = 0.2;          // integral of squared lateral acceleration
  double w_lanechange = 1.0;  // flat cost per lane change
  double r_invalid_state = -500.0;
  double r_invalid_action = -200.0;
  double r_collision = -1000.0;
};

/// Goal of one agent: a longitudinal velocity and a lane index.
struct DesiredState {
  double v_des = 8.0;  // m/s
  int k_des = 0;
};

/// -(w_v*|vx - v_des| + w_lane*|lane(y) - k_des| + w_center*|y - lane center|).
/// Always <= 0, 0 exactly at the desired state. Throws OffRoadState when y is
/// outside the road.
double state_reward(const VehicleState& s, const DesiredState& d, const RoadModel& road,
                    const RewardWeights& w);

/// Analytic integral of the squared second derivative of a quintic over
/// [0, T]; the integrand is a degree-6 polynomial.
double squared_accel_integral(const Quintic& q, double T);

/// -(w_ax*int(xdd^2) + w_ay*int(ydd^2) + lane-change cost). Always <= 0.
double action_cost(const Trajectory& traj, bool lane_changed, const RewardWeights& w);

/// Sum of the penalty terms whose flags are set; 0 when fully valid.
double validation_reward(const ValidationResult& vr, const RewardWeights& w);

/// r = r_state + r_action + r_validation.
double immediate_reward(double state_r, double action_r, double validation_r);

/// rewards[i] + lambda_i * sum of the other agents' rewards.
/// Throws IndexOutOfRange.
double cooperative_reward(std::span<const double> rewards, std::size_t i, double lambda_i);

}  // namespace decoc

#endif  // DECOC_REWARD_HPP
