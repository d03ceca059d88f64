#include "decoc/reward.hpp"

#include <cmath>

#include "decoc/errors.hpp"
#include "decoc/format.hpp"

namespace decoc {

double state_reward(const VehicleState& s, const DesiredState& d, const RoadModel& road,
                    const RewardWeights& w) {
  if (s.y < 0.0 || s.y > road.width()) {
    throw OffRoadState("state y=" + format_double(s.y) + " outside road");
  }
  const int k = lane_index(s.y, road);
  const double lane_dev = std::abs(static_cast<double>(k - d.k_des));
  const double center_dev = std::abs(s.y - road.lane_center(k));
  return -(w.w_v * std::abs(s.vx - d.v_des) + w.w_lane * lane_dev + w.w_center * center_dev);
}

double squared_accel_integral(const Quintic& q, double T) {
  // p''(t) = 2 c2 + 6 c3 t + 12 c4 t^2 + 20 c5 t^3; square and integrate the
  // degree-6 polynomial term by term.
  const double a0 = 2.0 * q.c[2];
  const double a1 = 6.0 * q.c[3];
  const double a2 = 12.0 * q.c[4];
  const double a3 = 20.0 * q.c[5];

  double sq[7] = {};
  const double a[4] = {a0, a1, a2, a3};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) sq[i + j] += a[i] * a[j];
  }
  double integral = 0.0;
  double tpow = T;
  for (int k = 0; k < 7; ++k) {
    integral += sq[k] * tpow / (k + 1);
    tpow *= T;
  }
  return integral;
}

double action_cost(const Trajectory& traj, bool lane_changed, const RewardWeights& w) {
  const double T = traj.quintics.duration;
  double cost = w.w_ax * squared_accel_integral(traj.quintics.x, T) +
                w.w_ay * squared_accel_integral(traj.quintics.y, T);
  if (lane_changed) cost += w.w_lanechange;
  return -cost;
}

double validation_reward(const ValidationResult& vr, const RewardWeights& w) {
  double r = 0.0;
  if (!vr.valid_state) r += w.r_invalid_state;
  if (!vr.valid_action) r += w.r_invalid_action;
  if (vr.collision) r += w.r_collision;
  return r;
}

double immediate_reward(double state_r, double action_r, double validation_r) {
  return state_r + action_r + validation_r;
}

double cooperative_reward(std::span<const double> rewards, std::size_t i, double lambda_i) {
  if (i >= rewards.size()) {
    throw IndexOutOfRange("agent index " + std::to_string(i) + " out of range [0, " +
                          std::to_string(rewards.size()) + ")");
  }
  double others = 0.0;
  for (std::size_t j = 0; j < rewards.size(); ++j) {
    if (j != i) others += rewards[j];
  }
  return rewards[i] + lambda_i * others;
}

}  // namespace decoc
