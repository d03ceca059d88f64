#ifndef DECOC_SIM_HPP
#define DECOC_SIM_HPP

#include <optional>
#include <string>
#include <vector>

#include "decoc/environment.hpp"
#include "decoc/search.hpp"

namespace decoc {

/// One executed planning step of the closed loop.
struct StepRecord {
  int step = 0;
  double time = 0.0;  // at the start of the step (s)
  std::vector<VehicleState> states;  // joint state the step started from
  std::vector<Action> actions;       // first action of each agent's own plan
  std::vector<ActionGroup> groups;
  std::vector<RewardBreakdown> rewards;
  std::vector<ValidationResult> validation;
};

struct SimulationTrace {
  std::string scenario_name;
  int agent_count = 0;
  double delta_t = 0.0;
  std::vector<double> v_des;  // per agent, for metric evaluation
  std::vector<std::string> agent_names;
  std::vector<StepRecord> steps;
  std::vector<VehicleState> final_states;
  double final_time = 0.0;
  bool ended_in_collision = false;
};

struct Metrics {
  double velocity_deviation = 0.0;   // sum over agents of int |vx - v_des| dt (m)
  std::vector<double> min_speed;     // per agent (m/s)
  int collision_count = 0;
  int steps_completed = 0;
};

/// Closed-loop decentralized execution: every agent replans each step with
/// its own search over the shared joint state and executes the first action
/// of its own plan. Per-agent RNG streams are seeded seed + agent id, so
/// traces are bitwise deterministic for a given seed. The trace ends at the
/// horizon or at the first collision step (recorded, then stop).
/// `mode_override`, when set, replaces every agent's prediction mode.
SimulationTrace run(const Scenario& scenario, int steps, const SearchConfig& cfg,
                    std::uint64_t seed, std::optional<PredictionMode> mode_override = {});

/// Trapezoidal integration of |vx - v_des| over the logged states, summed
/// over agents, plus minimum speeds and collision/step counters.
Metrics compute_metrics(const SimulationTrace& trace);

/// Fixed-header CSV writers shared by the CLI and the test suites.
void write_trace_csv(const SimulationTrace& trace, const std::string& path);
void write_explore_csv(const std::vector<RootActionRow>& rows, std::uint64_t scenario_hash,
                       const std::string& enhancements, const std::string& path);

}  // namespace decoc

#endif  // DECOC_SIM_HPP
