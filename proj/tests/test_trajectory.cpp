#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "decoc/errors.hpp"
#include "decoc/trajectory.hpp"

using namespace decoc;

namespace {

double boundary_residual(const Quintic& q, double p0, double v0, double a0, double p1,
                         double v1, double a1, double T) {
  double r = 0.0;
  r = std::max(r, std::abs(q.value(0.0) - p0));
  r = std::max(r, std::abs(q.deriv1(0.0) - v0));
  r = std::max(r, std::abs(q.deriv2(0.0) - a0));
  r = std::max(r, std::abs(q.value(T) - p1));
  r = std::max(r, std::abs(q.deriv1(T) - v1));
  r = std::max(r, std::abs(q.deriv2(T) - a1));
  return r;
}

}  // namespace

TEST_CASE("solve_quintic zero boundaries give the zero polynomial") {
  const Quintic q = solve_quintic(0, 0, 0, 0, 0, 0, 1.0);
  for (double c : q.c) CHECK(c == 0.0);
}

TEST_CASE("solve_quintic constant-velocity boundaries give a line") {
  const Quintic q = solve_quintic(0, 1, 0, 1, 1, 0, 1.0);
  CHECK(q.c[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(q.c[1] == doctest::Approx(1.0).epsilon(1e-12));
  for (int k = 2; k < 6; ++k) CHECK(std::abs(q.c[k]) < 1e-12);
}

TEST_CASE("solve_quintic matches the 6x6 linear-system oracle") {
  const Quintic q = solve_quintic(0, 10, 0, 22, 12, 0, 2.0);
  const auto ref = oracle::quintic_boundary_solve(0, 10, 0, 22, 12, 0, 2.0);
  for (int k = 0; k < 6; ++k) CHECK(q.c[k] == doctest::Approx(ref[k]).epsilon(1e-9));
}

TEST_CASE("solve_quintic rejects non-positive durations") {
  CHECK_THROWS_AS(solve_quintic(0, 0, 0, 1, 0, 0, 0.0), NonPositiveDuration);
  CHECK_THROWS_AS(solve_quintic(0, 0, 0, 1, 0, 0, -1.0), NonPositiveDuration);
}

TEST_CASE("solve_quintic boundary residuals stay below 1e-9 on random sets") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> val(-20.0, 20.0);
  std::uniform_real_distribution<double> dur(0.5, 4.0);
  for (int i = 0; i < 300; ++i) {
    const double p0 = val(rng), v0 = val(rng), a0 = val(rng);
    const double p1 = val(rng), v1 = val(rng), a1 = val(rng);
    const double T = dur(rng);
    const Quintic q = solve_quintic(p0, v0, a0, p1, v1, a1, T);
    CHECK(boundary_residual(q, p0, v0, a0, p1, v1, a1, T) < 1e-9);
    const auto ref = oracle::quintic_boundary_solve(p0, v0, a0, p1, v1, a1, T);
    for (int k = 0; k < 6; ++k) CHECK(q.c[k] == doctest::Approx(ref[k]).epsilon(1e-7));
  }
}

TEST_CASE("action_to_trajectory respects the longitudinal displacement identity") {
  VehicleState s;
  s.x = 5.0;
  s.vx = 10.0;

  SUBCASE("hold") {
    const Trajectory t = action_to_trajectory(s, Action{0.0, 0.0}, 2.0, 0.1);
    CHECK(t.terminal_state().x - s.x == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(t.terminal_state().vx == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(t.terminal_state().y == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("speed up") {
    const Trajectory t = action_to_trajectory(s, Action{2.0, 0.0}, 2.0, 0.1);
    CHECK(t.terminal_state().x - s.x == doctest::Approx(22.0).epsilon(1e-12));
    CHECK(t.terminal_state().vx == doctest::Approx(12.0).epsilon(1e-12));
  }
}

TEST_CASE("lateral acceleration peak matches the dense-grid oracle") {
  VehicleState s;
  s.vx = 8.0;
  const Trajectory t = action_to_trajectory(s, Action{0.0, 3.5}, 2.0, 0.1);

  double sampled_peak = 0.0;
  for (const TrajectoryPoint& pt : t.points) {
    sampled_peak = std::max(sampled_peak, std::abs(pt.state.ay));
  }
  const double dense_peak = oracle::max_abs_accel_on_grid(t.quintics.y, 2.0, 1e-4);
  CHECK(sampled_peak == doctest::Approx(dense_peak).epsilon(0.02));
}

TEST_CASE("action_to_trajectory rejects invalid inputs") {
  VehicleState s;
  s.vx = 1.0;
  CHECK_THROWS_AS(action_to_trajectory(s, Action{-2.0, 0.0}, 2.0, 0.1), NegativeTerminalSpeed);
  CHECK_THROWS_AS(action_to_trajectory(s, Action{0.0, 0.0}, 0.0, 0.1), NonPositiveDuration);
  CHECK_THROWS_AS(action_to_trajectory(s, Action{0.0, 0.0}, 2.0, 0.0), NonPositiveDuration);
}

TEST_CASE("sampling grid starts at 0, ends exactly at T, strictly increases") {
  VehicleState s;
  s.vx = 7.3;
  for (double dt : {0.1, 0.3, 0.07}) {
    const Trajectory t = action_to_trajectory(s, Action{1.1, -0.7}, 2.0, dt);
    CHECK(t.points.front().t == 0.0);
    CHECK(t.points.back().t == 2.0);
    for (std::size_t i = 1; i < t.points.size(); ++i) {
      CHECK(t.points[i].t > t.points[i - 1].t);
    }
  }
}

TEST_CASE("first sample reproduces the originating kinematic state") {
  VehicleState s;
  s.x = 3.0;
  s.y = 1.2;
  s.vx = 6.0;
  s.vy = 0.4;
  s.ax = 0.8;
  s.ay = -0.3;
  const Trajectory t = action_to_trajectory(s, Action{1.0, 2.0}, 2.0, 0.1);
  const VehicleState& p0 = t.points.front().state;
  CHECK(std::abs(p0.x - s.x) < 1e-9);
  CHECK(std::abs(p0.y - s.y) < 1e-9);
  CHECK(std::abs(p0.vx - s.vx) < 1e-9);
  CHECK(std::abs(p0.vy - s.vy) < 1e-9);
  CHECK(std::abs(p0.ax - s.ax) < 1e-9);
  CHECK(std::abs(p0.ay - s.ay) < 1e-9);
}

TEST_CASE("terminal boundary conditions hold on random actions") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    VehicleState s;
    s.x = 40.0 * u01(rng);
    s.y = 7.0 * u01(rng);
    s.vx = 12.0 * u01(rng);
    s.vy = u01(rng) - 0.5;
    s.ax = 2.0 * (u01(rng) - 0.5);
    s.ay = 2.0 * (u01(rng) - 0.5);
    Action a{8.0 * (u01(rng) - 0.5), 10.0 * (u01(rng) - 0.5)};
    if (s.vx + a.dv < 0.0) a.dv = -s.vx;
    const double T = 0.5 + 3.0 * u01(rng);
    const Trajectory t = action_to_trajectory(s, a, T, 0.1);
    const VehicleState& fin = t.terminal_state();
    CHECK(std::abs(fin.vx - (s.vx + a.dv)) < 1e-9);
    CHECK(std::abs(fin.ax) < 1e-9);
    CHECK(std::abs(fin.y - (s.y + a.dy)) < 1e-9);
    CHECK(std::abs(fin.vy) < 1e-9);
    CHECK(std::abs(fin.ay) < 1e-9);
    CHECK(std::abs((fin.x - s.x) - 0.5 * (s.vx + fin.vx) * T) < 1e-9);
  }
}

TEST_CASE("hold action from steady state yields constant-velocity motion") {
  VehicleState s;
  s.vx = 9.0;
  s.y = 1.75;
  const Trajectory t = action_to_trajectory(s, Action{0.0, 0.0}, 2.0, 0.1);
  for (const TrajectoryPoint& pt : t.points) {
    CHECK(std::abs(pt.state.vy) < 1e-9);
    CHECK(std::abs(pt.state.ax) < 1e-9);
    CHECK(std::abs(pt.state.ay) < 1e-9);
    CHECK(std::abs(pt.state.vx - 9.0) < 1e-9);
    CHECK(pt.curvature == 0.0);
  }
}

TEST_CASE("halving dt never changes the terminal state") {
  VehicleState s;
  s.vx = 8.0;
  s.y = 2.0;
  const Action a{1.5, 2.5};
  const Trajectory coarse = action_to_trajectory(s, a, 2.0, 0.2);
  const Trajectory fine = action_to_trajectory(s, a, 2.0, 0.1);
  CHECK(coarse.terminal_state().x == fine.terminal_state().x);
  CHECK(coarse.terminal_state().y == fine.terminal_state().y);
  CHECK(coarse.terminal_state().vx == fine.terminal_state().vx);
  CHECK(coarse.terminal_state().heading == fine.terminal_state().heading);
}

TEST_CASE("heading is retained below the speed epsilon") {
  VehicleState s;
  s.vx = 0.0;
  s.heading = 0.3;
  const Trajectory t = action_to_trajectory(s, Action{0.05, 0.0}, 2.0, 0.1);
  for (const TrajectoryPoint& pt : t.points) {
    CHECK(pt.state.heading == 0.3);  // never enough speed to re-derive it
    CHECK(pt.curvature == 0.0);
  }
}

TEST_CASE("curvature closed forms") {
  CHECK(curvature_at(1.0, 0.0, 0.0, 0.0) == 0.0);
  CHECK(curvature_at(1.0, 0.0, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  const double expected = (5.0 * 0.5 - 1.0 * 0.2) / std::pow(5.0 * 5.0 + 1.0 * 1.0, 1.5);
  CHECK(curvature_at(5.0, 1.0, 0.2, 0.5) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(curvature_at(0.05, 0.05, 3.0, -2.0) == 0.0);  // below the epsilon
}
