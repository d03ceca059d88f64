#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "decoc/errors.hpp"
#include "decoc/reward.hpp"

using namespace decoc;

namespace {

const RoadModel kRoad{2, 3.5, 150.0};

VehicleState at(double y, double vx) {
  VehicleState s;
  s.y = y;
  s.vx = vx;
  return s;
}

}  // namespace

TEST_CASE("state reward is zero exactly at the desired state") {
  RewardWeights w;
  const DesiredState d{8.0, 0};
  CHECK(state_reward(at(1.75, 8.0), d, kRoad, w) == 0.0);
}

TEST_CASE("state reward single velocity term") {
  RewardWeights w;
  w.w_v = 1.0;
  const DesiredState d{8.0, 0};
  CHECK(state_reward(at(1.75, 6.0), d, kRoad, w) == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("state reward sums lane and center deviations") {
  RewardWeights w;
  w.w_v = 1.0;
  w.w_lane = 5.0;
  w.w_center = 1.0;
  const DesiredState d{8.0, 0};
  // One lane above the desired one, 0.8 m off that lane's center.
  CHECK(state_reward(at(5.25 + 0.8, 8.0), d, kRoad, w) ==
        doctest::Approx(-5.8).epsilon(1e-12));
}

TEST_CASE("state reward rejects off-road states") {
  RewardWeights w;
  const DesiredState d{8.0, 0};
  CHECK_THROWS_AS(state_reward(at(-0.1, 8.0), d, kRoad, w), OffRoadState);
  CHECK_THROWS_AS(state_reward(at(7.2, 8.0), d, kRoad, w), OffRoadState);
}

TEST_CASE("state reward is never positive") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  RewardWeights w;
  for (int i = 0; i < 200; ++i) {
    const DesiredState d{10.0 * u01(rng), u01(rng) < 0.5 ? 0 : 1};
    CHECK(state_reward(at(7.0 * u01(rng), 14.0 * u01(rng)), d, kRoad, w) <= 0.0);
  }
}

TEST_CASE("action cost of constant-velocity motion is zero") {
  RewardWeights w;
  VehicleState s = at(1.75, 9.0);
  const Trajectory t = action_to_trajectory(s, Action{0, 0}, 2.0, 0.1);
  CHECK(action_cost(t, false, w) == 0.0);
  w.w_lanechange = 1.0;
  CHECK(action_cost(t, true, w) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("analytic acceleration integral matches Simpson quadrature") {
  RewardWeights w;
  w.w_ax = 1.0;
  w.w_ay = 0.0;
  w.w_lanechange = 0.0;
  VehicleState s = at(1.75, 10.0);
  const Trajectory t = action_to_trajectory(s, Action{2.0, 0.0}, 2.0, 0.1);
  const double analytic = squared_accel_integral(t.quintics.x, 2.0);
  const double numeric = oracle::simpson_squared_accel(t.quintics.x, 2.0, 20000);
  CHECK(analytic == doctest::Approx(numeric).epsilon(1e-6));
  CHECK(action_cost(t, false, w) == doctest::Approx(-analytic).epsilon(1e-12));
}

TEST_CASE("acceleration integrals match quadrature on random quintics") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> val(-15.0, 15.0);
  std::uniform_real_distribution<double> dur(0.5, 4.0);
  for (int i = 0; i < 100; ++i) {
    const double T = dur(rng);
    const Quintic q =
        solve_quintic(val(rng), val(rng), val(rng), val(rng), val(rng), val(rng), T);
    const double analytic = squared_accel_integral(q, T);
    const double numeric = oracle::simpson_squared_accel(q, T, 20000);
    if (numeric > 1e-12) {
      CHECK(std::abs(analytic - numeric) / numeric < 1e-6);
    } else {
      CHECK(std::abs(analytic) < 1e-9);
    }
  }
}

TEST_CASE("validation reward adds exactly the flagged penalties") {
  RewardWeights w;
  w.r_invalid_state = -500.0;
  w.r_invalid_action = -200.0;
  w.r_collision = -1000.0;

  ValidationResult clean;
  CHECK(validation_reward(clean, w) == 0.0);

  ValidationResult crash;
  crash.collision = true;
  CHECK(validation_reward(crash, w) == doctest::Approx(-1000.0));

  ValidationResult both;
  both.valid_state = false;
  both.valid_action = false;
  CHECK(validation_reward(both, w) == doctest::Approx(-700.0));
}

TEST_CASE("immediate reward is the plain sum") {
  CHECK(immediate_reward(0, 0, 0) == 0.0);
  CHECK(immediate_reward(-2, -1, 0) == doctest::Approx(-3.0));
  CHECK(immediate_reward(-2, -1, -1000) == doctest::Approx(-1003.0));
}

TEST_CASE("cooperative reward blends the other agents by lambda") {
  const std::vector<double> r3{-1.0, -2.0, -3.0};
  CHECK(cooperative_reward(r3, 0, 0.0) == doctest::Approx(-1.0));
  CHECK(cooperative_reward(r3, 0, 1.0) == doctest::Approx(-6.0));
  const std::vector<double> r2{-2.0, -4.0};
  CHECK(cooperative_reward(r2, 0, 0.5) == doctest::Approx(-4.0));
  CHECK_THROWS_AS(cooperative_reward(r2, 2, 0.5), IndexOutOfRange);
}

TEST_CASE("cooperative reward is linear in lambda and homogeneous") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    std::vector<double> r{-10.0 * u01(rng), -10.0 * u01(rng), -10.0 * u01(rng)};
    const double l = u01(rng);
    const double base = cooperative_reward(r, 1, 0.0);
    const double full = cooperative_reward(r, 1, 1.0);
    CHECK(cooperative_reward(r, 1, l) ==
          doctest::Approx(base + l * (full - base)).epsilon(1e-12));

    const double scale = 0.1 + 5.0 * u01(rng);
    std::vector<double> scaled = r;
    for (double& v : scaled) v *= scale;
    CHECK(cooperative_reward(scaled, 1, l) ==
          doctest::Approx(scale * cooperative_reward(r, 1, l)).epsilon(1e-12));
  }
}
