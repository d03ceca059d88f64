#ifndef DECOC_SEARCH_HPP
#define DECOC_SEARCH_HPP

#include <array>
#include <map>
#include <memory>
#include <random>
#include <vector>

#include "decoc/environment.hpp"
#include "decoc/search_config.hpp"

namespace decoc {

/// The nine semantic areas of the action space, labeled by the successor
/// state: keep / accelerate / decelerate crossed with stay / left / right.
enum class ActionGroup : int {
  kHold = 0,   // "0"
  kAccel,      // "+"
  kDecel,      // "-"
  kLeft,       // "L"
  kLeftAccel,  // "L+"
  kLeftDecel,  // "L-"
  kRight,      // "R"
  kRightAccel, // "R+"
  kRightDecel, // "R-"
};

inline constexpr int kGroupCount = 9;
inline constexpr double kSlightDvBand = 0.5;  // |dv| band of the "0/slight" class (m/s)

const char* to_string(ActionGroup g);

/// One explored action of one agent at one node.
struct ActionStats {
  Action action;
  double q = 0.0;  // running action-value estimate
  double n = 0.0;  // real-valued visit count
  ActionGroup group = ActionGroup::kHold;
};

/// Aggregate over the member actions of one semantic group.
struct GroupStats {
  double q = 0.0;  // visit-weighted mean of member q
  double n = 0.0;  // sum of member visit counts
  std::vector<int> members;  // indices into AgentNodeStats::actions
};

/// Decoupled per-agent statistics at one node.
struct AgentNodeStats {
  std::vector<ActionStats> actions;           // A_exp
  std::array<GroupStats, kGroupCount> groups;
};

/// Joint actions keyed exactly by the (dv, dy) pairs that produced the child.
using JointActionKey = std::vector<std::pair<double, double>>;

struct SearchNode {
  std::vector<VehicleState> joint_state;  // per agent, own frames
  int depth = 0;
  double n = 1.0;  // real-valued visit count; creation counts as the first visit
  bool terminal = false;
  std::vector<AgentNodeStats> per_agent;
  std::vector<double> edge_cooperative;  // cached rewards of the edge into this node
  std::map<JointActionKey, std::unique_ptr<SearchNode>> children;
};

/// Classifies an action by its successor state: lateral class from the lane
/// index of y + dy against the lane index of y, longitudinal class from dv
/// against the slight-change band.
ActionGroup assign_action_group(const VehicleState& s, const Action& a, const RoadModel& road);

/// q + c * sqrt(ln(parent_n + 1) / n). Throws UnvisitedAction if n = 0;
/// unvisited entries are selected before any UCT comparison.
double uct_value(double q, double n, double parent_n, double c);

/// True iff the node's action set must be widened for this agent, i.e.
/// N(A(s)) < C_PW * n(s)^alpha_PW.
bool progressive_widening_due(const SearchNode& node, int agent, const SearchConfig& cfg);

/// RBF similarity exp(-gamma * (scale_v*(ddv)^2 + scale_y*(ddy)^2)) in [0, 1].
double action_kernel(const Action& a, const Action& b, double gamma, double scale_dv,
                     double scale_dy);

/// Kernel-weighted backpropagation of return G through action `taken`: every
/// explored action a receives w = K(a, taken), n(a) += w,
/// q(a) += w * (G - q(a)) / n(a); group statistics are recomputed from the
/// members and the node visit count grows by 1. With the similarity toggle
/// off only the taken action is updated (w = 1). Throws UnknownAction.
void similarity_update(SearchNode& node, int agent, const Action& taken, double G,
                       const SearchConfig& cfg);

/// Draws |A_rnd| uniform candidates from the action box (dv truncated to
/// keep vx + dv >= 0) and returns the blind-value argmax:
/// BV(a') = min over explored a of [UCT(a) + rho * K(a, a')], with
/// rho = sigma(UCT over A_exp) / sigma(K(box center, .) over A_rnd) and
/// rho = 0 when the denominator vanishes. With no visited explored action the
/// first candidate (a uniform draw) is returned. Ties break uniformly.
Action blind_value_propose(const std::vector<ActionStats>& explored, double node_n,
                           const SearchConfig& cfg, double vx0, std::mt19937_64& rng);

/// Two-stage (group, then action) or flat UCT selection with progressive
/// widening. Widening inserts the proposed action into A_exp and returns it.
Action select_agent_action(SearchNode& node, int agent, const SearchConfig& cfg,
                           const RoadModel& road, std::mt19937_64& rng);

/// Per-agent independent selection; scripted agents contribute (0, 0).
std::vector<Action> select_joint_action(SearchNode& node, const SearchConfig& cfg,
                                        const RoadModel& road, const std::vector<bool>& planned,
                                        std::mt19937_64& rng);

/// Random-policy simulation until the horizon: per step each planned agent
/// draws from the nine group representatives (holding with the configured
/// probability), the world steps, and per-agent discounted cooperative
/// rewards accumulate. Stops after a collision step.
std::vector<double> rollout(std::vector<VehicleState> joint_state, int depth_remaining,
                            const World& world, const SearchConfig& cfg,
                            const std::vector<bool>& planned, std::mt19937_64& rng);

/// One root-level explored action, as reported for exploration analysis.
struct RootActionRow {
  int agent = 0;
  Action action;
  double n = 0.0;
  double q = 0.0;
  ActionGroup group = ActionGroup::kHold;
  bool selected = false;
};

struct SearchResult {
  std::vector<Action> best;         // per agent; (0,0) for scripted agents
  std::vector<bool> planned;        // which agents were searched over
  std::vector<RootActionRow> root_stats;
  std::unique_ptr<SearchNode> root; // retained for inspection and tests
};

/// Runs the full search from the given joint state. In cooperative mode all
/// agents' actions are searched (decoupled); in constant-velocity mode only
/// `ego` plans and every other agent is scripted to (0, 0) in both tree and
/// rollout. Returns each planned agent's best root action (argmax q among
/// actions with n >= 1; ties by higher n, then uniformly).
SearchResult run_search(const std::vector<VehicleState>& root_state, const World& world,
                        const SearchConfig& cfg, int ego, PredictionMode mode,
                        std::mt19937_64& rng);

}  // namespace decoc

#endif  // DECOC_SEARCH_HPP
