#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "decoc/environment.hpp"
#include "decoc/errors.hpp"
#include "decoc/sim.hpp"

using namespace decoc;

namespace {

Scenario lone_agent_scenario() {
  Scenario sc;
  sc.name = "lone";
  sc.road = RoadModel{2, 3.5, 400.0};
  AgentSpec a;
  a.id = 0;
  a.name = "solo";
  a.initial.x = 5.0;
  a.initial.y = 1.75;
  a.initial.vx = 9.0;
  a.desired = DesiredState{9.0, 0};
  sc.agents = {a};
  sc.search.iterations = 1500;
  return sc;
}

std::string file_contents(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SimulationTrace synthetic_trace(const std::vector<double>& speeds, double v_des,
                                double delta_t) {
  SimulationTrace trace;
  trace.scenario_name = "synthetic";
  trace.agent_count = 1;
  trace.delta_t = delta_t;
  trace.v_des = {v_des};
  trace.agent_names = {"a"};
  for (std::size_t i = 0; i + 1 < speeds.size(); ++i) {
    StepRecord rec;
    rec.step = static_cast<int>(i);
    rec.time = i * delta_t;
    VehicleState s;
    s.vx = speeds[i];
    rec.states = {s};
    rec.actions = {Action{0.0, 0.0}};
    rec.groups = {ActionGroup::kHold};
    rec.rewards = {RewardBreakdown{}};
    rec.validation = {ValidationResult{}};
    trace.steps.push_back(rec);
  }
  VehicleState last;
  last.vx = speeds.back();
  trace.final_states = {last};
  trace.final_time = (speeds.size() - 1) * delta_t;
  return trace;
}

}  // namespace

TEST_CASE("an agent already at its desired state keeps holding") {
  const Scenario sc = lone_agent_scenario();
  const SimulationTrace trace = run(sc, 4, sc.search, 3);
  REQUIRE(trace.steps.size() == 4);
  for (const StepRecord& rec : trace.steps) {
    CHECK(std::abs(rec.actions[0].dv) < 1.0);
    CHECK(std::abs(rec.actions[0].dy) < 1.75);
    CHECK(rec.groups[0] == ActionGroup::kHold);
    CHECK(rec.validation[0].fully_valid());
  }
  const Metrics m = compute_metrics(trace);
  CHECK(m.velocity_deviation < 0.5 * trace.steps.size());
  CHECK(m.collision_count == 0);
}

TEST_CASE("metrics: constant desired speed integrates to zero") {
  const SimulationTrace trace = synthetic_trace({8, 8, 8, 8, 8}, 8.0, 2.0);
  const Metrics m = compute_metrics(trace);
  CHECK(m.velocity_deviation == 0.0);
  CHECK(m.min_speed[0] == 8.0);
  CHECK(m.steps_completed == 4);
}

TEST_CASE("metrics: one agent a fixed 1 m/s below target for 10 s") {
  const SimulationTrace trace = synthetic_trace({9, 9, 9, 9, 9, 9}, 10.0, 2.0);
  const Metrics m = compute_metrics(trace);
  CHECK(m.velocity_deviation == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("metrics: piecewise-linear speed matches a dense quadrature oracle") {
  // Crossings of v_des sit exactly on logged samples, so the trapezoid over
  // logged states is the exact integral.
  const std::vector<double> speeds{10, 8, 6, 8, 10, 12, 10};
  const double v_des = 10.0;
  const double delta_t = 2.0;
  const SimulationTrace trace = synthetic_trace(speeds, v_des, delta_t);
  const Metrics m = compute_metrics(trace);

  double fine = 0.0;
  const double h = 1e-4;
  for (std::size_t seg = 0; seg + 1 < speeds.size(); ++seg) {
    for (double t = 0.0; t < delta_t - 0.5 * h; t += h) {
      const double f0 = std::abs(speeds[seg] + (speeds[seg + 1] - speeds[seg]) * t / delta_t - v_des);
      const double f1 = std::abs(speeds[seg] + (speeds[seg + 1] - speeds[seg]) * (t + h) / delta_t - v_des);
      fine += 0.5 * (f0 + f1) * h;
    }
  }
  CHECK(m.velocity_deviation == doctest::Approx(fine).epsilon(0.01));
  CHECK(m.min_speed[0] == 6.0);
}

TEST_CASE("identical seeds give bitwise identical traces") {
  const Scenario sc = make_bottleneck();
  SearchConfig cfg = sc.search;
  cfg.iterations = 800;
  const SimulationTrace a = run(sc, 3, cfg, 11, PredictionMode::kCooperative);
  const SimulationTrace b = run(sc, 3, cfg, 11, PredictionMode::kCooperative);
  write_trace_csv(a, "/tmp/decoc_trace_a.csv");
  write_trace_csv(b, "/tmp/decoc_trace_b.csv");
  CHECK(file_contents("/tmp/decoc_trace_a.csv") == file_contents("/tmp/decoc_trace_b.csv"));
  std::remove("/tmp/decoc_trace_a.csv");
  std::remove("/tmp/decoc_trace_b.csv");
}

TEST_CASE("an agent's choice does not depend on other agents' seed streams") {
  // Decentralization: at the first step agent 0 plans from the shared joint
  // state using only its own RNG stream, so re-seeding agent 1 (id-based
  // stream) must not change agent 0's first action.
  Scenario sc = make_bottleneck();
  SearchConfig cfg = sc.search;
  cfg.iterations = 600;

  const SimulationTrace base = run(sc, 1, cfg, 21, PredictionMode::kCooperative);

  Scenario shifted = sc;
  shifted.agents[1].id = 7;  // moves agent 1 onto a different stream
  const SimulationTrace other = run(shifted, 1, cfg, 21, PredictionMode::kCooperative);

  CHECK(base.steps[0].actions[0].dv == other.steps[0].actions[0].dv);
  CHECK(base.steps[0].actions[0].dy == other.steps[0].actions[0].dy);
  CHECK(base.steps[0].actions[1].dv != other.steps[0].actions[1].dv);
}

TEST_CASE("collisions terminate the trace and are recorded") {
  // Two agents forced head-on in a single lane with planning budgets too
  // small to avoid each other reliably would be flaky; instead stage an
  // unavoidable geometry: both already inside the same corridor cell moving
  // toward each other at one step of distance.
  Scenario sc;
  sc.name = "headon";
  sc.road = RoadModel{1, 3.5, 60.0};
  AgentSpec a;
  a.id = 0;
  a.initial.x = 10.0;
  a.initial.y = 1.75;
  a.initial.vx = 8.0;
  a.desired = DesiredState{8.0, 0};
  AgentSpec b = a;
  b.id = 1;
  b.direction = -1;
  b.initial.x = 60.0 - 26.0;  // world x = 26, closing gap of 16 m
  sc.agents = {a, b};
  sc.search.iterations = 300;
  sc.search.max_depth = 2;
  validate_scenario(sc);

  const SimulationTrace trace = run(sc, 5, sc.search, 2);
  CHECK(trace.ended_in_collision);
  CHECK(trace.steps.size() < 5);
  const Metrics m = compute_metrics(trace);
  CHECK(m.collision_count > 0);
}

TEST_CASE("trace CSV carries the documented header") {
  const Scenario sc = lone_agent_scenario();
  SearchConfig cfg = sc.search;
  cfg.iterations = 200;
  const SimulationTrace trace = run(sc, 1, cfg, 1);
  write_trace_csv(trace, "/tmp/decoc_trace_header.csv");
  std::ifstream in("/tmp/decoc_trace_header.csv");
  std::string line;
  std::getline(in, line);
  CHECK(line.rfind("# scenario=", 0) == 0);
  std::getline(in, line);
  CHECK(line ==
        "step,time,agent,x,y,vx,vy,ax,ay,heading,action_dv,action_dy,group,"
        "r_state,r_action,r_validation,valid_state,valid_action,collision");
  std::remove("/tmp/decoc_trace_header.csv");
}
