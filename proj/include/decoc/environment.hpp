#ifndef DECOC_ENVIRONMENT_HPP
#define DECOC_ENVIRONMENT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "decoc/reward.hpp"
#include "decoc/road.hpp"
#include "decoc/search_config.hpp"
#include "decoc/trajectory.hpp"
#include "decoc/validation.hpp"

namespace decoc {

/// Static oriented rectangle (e.g. a parked vehicle), in world coordinates.
struct Obstacle {
  double x = 0.0;
  double y = 0.0;
  double length = 4.5;
  double width = 1.9;
  double heading = 0.0;
};

enum class PredictionMode { kConstantVelocity, kCooperative };

const char* to_string(PredictionMode m);
PredictionMode prediction_mode_from_string(const std::string& s);

/// One agent of a scenario. `direction` is +1 for agents driving along the
/// world x axis and -1 for oncoming agents, whose own frame is the world
/// frame rotated by pi about the road center so that vx stays >= 0.
struct AgentSpec {
  int id = 0;
  std::string name;
  VehicleState initial;
  VehicleParams params;
  DesiredState desired;
  double lambda = 0.5;  // cooperation factor, in [0, 1]
  PredictionMode prediction = PredictionMode::kCooperative;
  int direction = +1;
};

struct Scenario {
  std::string name;
  RoadModel road;
  std::vector<Obstacle> obstacles;
  std::vector<AgentSpec> agents;
  RewardWeights weights;
  SearchConfig search;
};

/// Throws ValidationError naming the violated invariant (agents off road,
/// initial collisions, lambda out of range, ...).
void validate_scenario(const Scenario& sc);

Scenario make_bottleneck();
Scenario make_merge_in();

/// Loads a scenario by built-in name ("bottleneck", "merge-in") or JSON file
/// path. Throws ParseError with field diagnostics, ValidationError.
Scenario load_scenario(const std::string& name_or_path);

std::string scenario_to_json(const Scenario& sc);
Scenario scenario_from_json(const std::string& text);
void save_scenario(const Scenario& sc, const std::string& path);

/// FNV-1a over the canonical JSON form; stable across runs.
std::uint64_t scenario_hash(const Scenario& sc);

/// Maps a state from an agent's own frame into the world frame (identity for
/// direction +1, rotation by pi about the road center for -1).
VehicleState to_world_frame(const VehicleState& s, int direction, const RoadModel& road);

struct RewardBreakdown {
  double state = 0.0;
  double action = 0.0;
  double validation = 0.0;

  double total() const { return state + action + validation; }
};

struct StepResult {
  std::vector<VehicleState> next;  // per agent, own frames
  std::vector<ValidationResult> validation;
  bool any_collision = false;
};

struct TransitionResult {
  std::vector<VehicleState> next;
  std::vector<ValidationResult> validation;
  std::vector<RewardBreakdown> rewards;
  std::vector<double> cooperative;  // per agent, with its own lambda
  bool any_collision = false;
};

/// Deterministic world shared by tree search, rollouts and the simulator.
/// Holds a reference to the scenario; the scenario must outlive the world.
class World {
 public:
  explicit World(const Scenario& sc) : sc_(sc) {}

  const Scenario& scenario() const { return sc_; }
  const RoadModel& road() const { return sc_.road; }
  std::size_t agent_count() const { return sc_.agents.size(); }

  /// Deterministic transition: next state is each trajectory's terminal
  /// state; validation covers drivability, corridor containment and pairwise
  /// agent/agent plus agent/obstacle collisions (checked in the world frame).
  /// Throws MismatchedSampling if the trajectories disagree on the grid.
  StepResult step(std::span<const VehicleState> states,
                  std::span<const Trajectory> trajectories) const;

  /// step() plus reward evaluation. Actions with vx + dv < 0 are clamped to
  /// the full stop dv = -vx so the search stays total over the action box.
  TransitionResult evaluate(std::span<const VehicleState> states,
                            std::span<const Action> actions) const;

 private:
  const Scenario& sc_;
};

}  // namespace decoc

#endif  // DECOC_ENVIRONMENT_HPP
