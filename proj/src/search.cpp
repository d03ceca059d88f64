#include "decoc/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "decoc/errors.hpp"

namespace decoc {

const char* to_string(ActionGroup g) {
  switch (g) {
    case ActionGroup::kHold: return "0";
    case ActionGroup::kAccel: return "+";
    case ActionGroup::kDecel: return "-";
    case ActionGroup::kLeft: return "L";
    case ActionGroup::kLeftAccel: return "L+";
    case ActionGroup::kLeftDecel: return "L-";
    case ActionGroup::kRight: return "R";
    case ActionGroup::kRightAccel: return "R+";
    case ActionGroup::kRightDecel: return "R-";
  }
  return "?";
}

void apply_enhancements(SearchConfig& cfg, const std::string& spec) {
  cfg.use_groups = cfg.use_guided = cfg.use_similarity = false;
  if (spec == "basic") return;
  if (spec == "guided") {
    cfg.use_guided = true;
  } else if (spec == "groups") {
    cfg.use_groups = true;
  } else if (spec == "groups+guided") {
    cfg.use_groups = cfg.use_guided = true;
  } else if (spec == "groups+guided+similarity") {
    cfg.use_groups = cfg.use_guided = cfg.use_similarity = true;
  } else {
    throw ParseError("unknown enhancements '" + spec +
                     "' (basic|guided|groups|groups+guided|groups+guided+similarity)");
  }
}

std::string enhancements_string(const SearchConfig& cfg) {
  if (!cfg.use_groups && !cfg.use_guided && !cfg.use_similarity) return "basic";
  if (!cfg.use_groups && cfg.use_guided && !cfg.use_similarity) return "guided";
  if (cfg.use_groups && !cfg.use_guided && !cfg.use_similarity) return "groups";
  if (cfg.use_groups && cfg.use_guided && !cfg.use_similarity) return "groups+guided";
  if (cfg.use_groups && cfg.use_guided && cfg.use_similarity) return "groups+guided+similarity";
  std::string s;
  if (cfg.use_groups) s += "groups+";
  if (cfg.use_guided) s += "guided+";
  if (cfg.use_similarity) s += "similarity+";
  s.pop_back();
  return s;
}

ActionGroup assign_action_group(const VehicleState& s, const Action& a, const RoadModel& road) {
  // Raw floor arithmetic: a successor beyond the road edge still counts as a
  // lateral shift in that direction, it must not fall into the "no change"
  // class and contaminate its statistics.
  const int k0 = static_cast<int>(std::floor(s.y / road.lane_width));
  const int k1 = static_cast<int>(std::floor((s.y + a.dy) / road.lane_width));
  const int lat = (k1 > k0) ? 1 : (k1 < k0 ? -1 : 0);
  const int lon = (a.dv > kSlightDvBand) ? 1 : (a.dv < -kSlightDvBand ? -1 : 0);
  static constexpr ActionGroup table[3][3] = {
      // lon: slight, accel, decel   (lat rows: stay, left, right)
      {ActionGroup::kHold, ActionGroup::kAccel, ActionGroup::kDecel},
      {ActionGroup::kLeft, ActionGroup::kLeftAccel, ActionGroup::kLeftDecel},
      {ActionGroup::kRight, ActionGroup::kRightAccel, ActionGroup::kRightDecel},
  };
  const int row = lat == 0 ? 0 : (lat > 0 ? 1 : 2);
  const int col = lon == 0 ? 0 : (lon > 0 ? 1 : 2);
  return table[row][col];
}

double uct_value(double q, double n, double parent_n, double c) {
  if (!(n > 0.0)) throw UnvisitedAction("UCT queried for an unvisited entry");
  return q + c * std::sqrt(std::log(parent_n + 1.0) / n);
}

bool progressive_widening_due(const SearchNode& node, int agent, const SearchConfig& cfg) {
  const double explored = static_cast<double>(node.per_agent[agent].actions.size());
  return explored < cfg.pw_c * std::pow(node.n, cfg.pw_alpha);
}

double action_kernel(const Action& a, const Action& b, double gamma, double scale_dv,
                     double scale_dy) {
  const double ddv = a.dv - b.dv;
  const double ddy = a.dy - b.dy;
  return std::exp(-gamma * (scale_dv * ddv * ddv + scale_dy * ddy * ddy));
}

void similarity_update(SearchNode& node, int agent, const Action& taken, double G,
                       const SearchConfig& cfg) {
  AgentNodeStats& st = node.per_agent.at(agent);
  int taken_idx = -1;
  for (std::size_t i = 0; i < st.actions.size(); ++i) {
    if (st.actions[i].action == taken) {
      taken_idx = static_cast<int>(i);
      break;
    }
  }
  if (taken_idx < 0) throw UnknownAction("updated action is not in the explored set");

  if (cfg.use_similarity) {
    for (ActionStats& as : st.actions) {
      const double w = action_kernel(as.action, taken, cfg.kernel_gamma, cfg.kernel_scale_dv,
                                     cfg.kernel_scale_dy);
      // Weights below the cutoff are numerical dust; skipping them keeps
      // genuinely untouched entries at exactly n = 0 for the unvisited
      // priority.
      if (w >= 1e-6) {
        as.n += w;
        as.q += w * (G - as.q) / as.n;
      }
    }
  } else {
    ActionStats& as = st.actions[taken_idx];
    as.n += 1.0;
    as.q += (G - as.q) / as.n;
  }

  for (GroupStats& g : st.groups) {
    g.n = 0.0;
    double weighted_q = 0.0;
    for (int m : g.members) {
      g.n += st.actions[m].n;
      weighted_q += st.actions[m].n * st.actions[m].q;
    }
    g.q = g.n > 0.0 ? weighted_q / g.n : 0.0;
  }
  node.n += 1.0;
}

namespace {

Action uniform_action(const ActionBox& box, double vx0, std::mt19937_64& rng) {
  // Reverse motion is out of scope, so the dv range is truncated at -vx0.
  const double lo = std::min(std::max(box.dv_min, -vx0), box.dv_max);
  std::uniform_real_distribution<double> ddv(lo, box.dv_max);
  std::uniform_real_distribution<double> ddy(box.dy_min, box.dy_max);
  const double dv = ddv(rng);
  const double dy = ddy(rng);
  return Action{dv, dy};
}

double population_stddev(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  return std::sqrt(var / static_cast<double>(values.size()));
}

int pick_with_ties(const std::vector<int>& ties, std::mt19937_64& rng) {
  if (ties.size() == 1) return ties.front();
  std::uniform_int_distribution<std::size_t> pick(0, ties.size() - 1);
  return ties[pick(rng)];
}

void add_explored_action(AgentNodeStats& st, const VehicleState& s, const Action& a,
                         const RoadModel& road) {
  ActionStats as;
  as.action = a;
  as.group = assign_action_group(s, a, road);
  st.actions.push_back(as);
  st.groups[static_cast<int>(as.group)].members.push_back(
      static_cast<int>(st.actions.size()) - 1);
}

}  // namespace

Action blind_value_propose(const std::vector<ActionStats>& explored, double node_n,
                           const SearchConfig& cfg, double vx0, std::mt19937_64& rng) {
  const int count = std::max(cfg.bv_candidates, 1);
  std::vector<Action> candidates;
  candidates.reserve(count);
  for (int i = 0; i < count; ++i) candidates.push_back(uniform_action(cfg.box, vx0, rng));

  // Unvisited entries carry no UCT information and are skipped.
  std::vector<const Action*> visited;
  std::vector<double> ucts;
  for (const ActionStats& as : explored) {
    if (as.n > 0.0) {
      visited.push_back(&as.action);
      ucts.push_back(uct_value(as.q / cfg.reward_scale, as.n, node_n, cfg.uct_c));
    }
  }
  if (visited.empty()) return candidates.front();

  auto measure = [&](const Action& a, const Action& b) {
    if (cfg.bv_use_distance) {
      const double ddv = a.dv - b.dv;
      const double ddy = a.dy - b.dy;
      return std::sqrt(cfg.kernel_scale_dv * ddv * ddv + cfg.kernel_scale_dy * ddy * ddy);
    }
    return action_kernel(a, b, cfg.kernel_gamma, cfg.kernel_scale_dv, cfg.kernel_scale_dy);
  };

  const Action center{cfg.box.dv_center(), cfg.box.dy_center()};
  std::vector<double> center_measures;
  center_measures.reserve(candidates.size());
  for (const Action& c : candidates) center_measures.push_back(measure(center, c));
  const double sigma_measure = population_stddev(center_measures);
  const double rho = sigma_measure > 0.0 ? population_stddev(ucts) / sigma_measure : 0.0;

  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> ties;
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    double bv = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < visited.size(); ++i) {
      bv = std::min(bv, ucts[i] + rho * measure(*visited[i], candidates[j]));
    }
    if (bv > best) {
      best = bv;
      ties.assign(1, static_cast<int>(j));
    } else if (bv == best) {
      ties.push_back(static_cast<int>(j));
    }
  }
  return candidates[pick_with_ties(ties, rng)];
}

Action select_agent_action(SearchNode& node, int agent, const SearchConfig& cfg,
                           const RoadModel& road, std::mt19937_64& rng) {
  AgentNodeStats& st = node.per_agent.at(agent);
  const VehicleState& s = node.joint_state.at(agent);

  if (progressive_widening_due(node, agent, cfg)) {
    const Action a = cfg.use_guided ? blind_value_propose(st.actions, node.n, cfg, s.vx, rng)
                                    : uniform_action(cfg.box, s.vx, rng);
    for (const ActionStats& as : st.actions) {
      if (as.action == a) return a;  // exact duplicate merges into the entry
    }
    add_explored_action(st, s, a, road);
    return a;
  }

  auto pick_action_among = [&](const std::vector<int>& members, double parent_n) -> int {
    std::vector<int> unvisited;
    for (int m : members) {
      if (st.actions[m].n == 0.0) unvisited.push_back(m);
    }
    if (!unvisited.empty()) return pick_with_ties(unvisited, rng);
    double best = -std::numeric_limits<double>::infinity();
    std::vector<int> ties;
    for (int m : members) {
      const ActionStats& as = st.actions[m];
      const double v = uct_value(as.q / cfg.reward_scale, as.n, parent_n, cfg.uct_c);
      if (v > best) {
        best = v;
        ties.assign(1, m);
      } else if (v == best) {
        ties.push_back(m);
      }
    }
    return pick_with_ties(ties, rng);
  };

  if (cfg.use_groups) {
    std::vector<int> unvisited_groups;
    for (int g = 0; g < kGroupCount; ++g) {
      if (!st.groups[g].members.empty() && st.groups[g].n == 0.0) unvisited_groups.push_back(g);
    }
    int gidx;
    if (!unvisited_groups.empty()) {
      gidx = pick_with_ties(unvisited_groups, rng);
    } else {
      double best = -std::numeric_limits<double>::infinity();
      std::vector<int> ties;
      for (int g = 0; g < kGroupCount; ++g) {
        const GroupStats& gs = st.groups[g];
        if (gs.members.empty()) continue;
        const double v = uct_value(gs.q / cfg.reward_scale, gs.n, node.n, cfg.uct_c);
        if (v > best) {
          best = v;
          ties.assign(1, g);
        } else if (v == best) {
          ties.push_back(g);
        }
      }
      gidx = pick_with_ties(ties, rng);
    }
    const GroupStats& gs = st.groups[gidx];
    return st.actions[pick_action_among(gs.members, gs.n > 0.0 ? gs.n : node.n)].action;
  }

  std::vector<int> all(st.actions.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return st.actions[pick_action_among(all, node.n)].action;
}

std::vector<Action> select_joint_action(SearchNode& node, const SearchConfig& cfg,
                                        const RoadModel& road, const std::vector<bool>& planned,
                                        std::mt19937_64& rng) {
  std::vector<Action> joint(node.joint_state.size(), Action{0.0, 0.0});
  for (std::size_t i = 0; i < joint.size(); ++i) {
    if (planned[i]) joint[i] = select_agent_action(node, static_cast<int>(i), cfg, road, rng);
  }
  return joint;
}

namespace {

Action rollout_policy(const VehicleState& s, const RoadModel& road, const SearchConfig& cfg,
                      std::mt19937_64& rng) {
  // Representatives of the nine semantic groups; the hold action is drawn
  // with the configured probability, the rest uniformly.
  static constexpr int kReps[8][2] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                                      {1, 1},  {1, -1}, {-1, 1}, {-1, -1}};
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, 7);
  for (int attempt = 0; attempt < 4; ++attempt) {  // 1 draw + up to 3 resamples
    Action a{0.0, 0.0};
    if (u01(rng) >= cfg.rollout_hold_prob) {
      const auto& r = kReps[pick(rng)];
      a.dv = r[0] * cfg.seed_dv_step;
      a.dy = r[1] * road.lane_width;
    }
    const double y1 = s.y + a.dy;
    if (s.vx + a.dv >= 0.0 && y1 >= 0.0 && y1 <= road.width()) return a;
  }
  return Action{0.0, 0.0};
}

struct SearchContext {
  const World& world;
  const SearchConfig& cfg;
  const std::vector<bool>& planned;
  std::mt19937_64& rng;
};

JointActionKey key_of(const std::vector<Action>& joint) {
  JointActionKey key;
  key.reserve(joint.size());
  for (const Action& a : joint) key.emplace_back(a.dv, a.dy);
  return key;
}

void seed_initial_actions(SearchNode& node, const SearchContext& ctx) {
  const RoadModel& road = ctx.world.road();
  const double step = ctx.cfg.seed_dv_step;
  const Action pattern[5] = {{0.0, 0.0},
                             {step, 0.0},
                             {-step, 0.0},
                             {0.0, road.lane_width},
                             {0.0, -road.lane_width}};
  const int count = std::clamp(ctx.cfg.initial_actions_per_agent, 1, 5);
  for (std::size_t i = 0; i < node.joint_state.size(); ++i) {
    if (!ctx.planned[i]) continue;
    AgentNodeStats& st = node.per_agent[i];
    const VehicleState& s = node.joint_state[i];
    for (int p = 0; p < count; ++p) {
      Action a = pattern[p];
      if (s.vx + a.dv < 0.0) a.dv = -s.vx;  // braking seed saturates at full stop
      // Lane-change seeds pointing off the road are dropped rather than
      // seeded as guaranteed penalties.
      if (s.y + a.dy < 0.0 || s.y + a.dy > road.width()) continue;
      bool duplicate = false;
      for (const ActionStats& as : st.actions) duplicate = duplicate || as.action == a;
      if (!duplicate) add_explored_action(st, s, a, road);
    }
  }
}

std::unique_ptr<SearchNode> make_node(std::vector<VehicleState> state, int depth, bool terminal,
                                      std::vector<double> edge, const SearchContext& ctx) {
  auto node = std::make_unique<SearchNode>();
  node->joint_state = std::move(state);
  node->depth = depth;
  node->terminal = terminal;
  node->per_agent.resize(node->joint_state.size());
  node->edge_cooperative = std::move(edge);
  if (!terminal) seed_initial_actions(*node, ctx);
  return node;
}

std::vector<double> simulate(SearchNode& node, const SearchContext& ctx) {
  const std::size_t n = node.joint_state.size();
  if (node.terminal) return std::vector<double>(n, 0.0);

  std::vector<Action> joint =
      select_joint_action(node, ctx.cfg, ctx.world.road(), ctx.planned, ctx.rng);
  JointActionKey key = key_of(joint);
  std::vector<double> g(n, 0.0);

  auto it = node.children.find(key);
  if (it == node.children.end()) {
    TransitionResult tr = ctx.world.evaluate(node.joint_state, joint);
    const bool terminal = tr.any_collision || node.depth + 1 >= ctx.cfg.max_depth;
    auto child =
        make_node(std::move(tr.next), node.depth + 1, terminal, std::move(tr.cooperative), ctx);
    std::vector<double> tail(n, 0.0);
    if (!child->terminal) {
      tail = rollout(child->joint_state, ctx.cfg.max_depth - child->depth, ctx.world, ctx.cfg,
                     ctx.planned, ctx.rng);
    }
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = child->edge_cooperative[i] + ctx.cfg.discount * tail[i];
    }
    node.children.emplace(std::move(key), std::move(child));
  } else {
    SearchNode& child = *it->second;
    const std::vector<double> tail = simulate(child, ctx);
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = child.edge_cooperative[i] + ctx.cfg.discount * tail[i];
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (ctx.planned[i]) similarity_update(node, static_cast<int>(i), joint[i], g[i], ctx.cfg);
  }
  return g;
}

}  // namespace

std::vector<double> rollout(std::vector<VehicleState> joint_state, int depth_remaining,
                            const World& world, const SearchConfig& cfg,
                            const std::vector<bool>& planned, std::mt19937_64& rng) {
  const std::size_t n = joint_state.size();
  std::vector<double> returns(n, 0.0);
  std::vector<Action> joint(n);
  double discount_pow = 1.0;
  for (int step = 0; step < depth_remaining; ++step) {
    for (std::size_t i = 0; i < n; ++i) {
      joint[i] = planned[i] ? rollout_policy(joint_state[i], world.road(), cfg, rng)
                            : Action{0.0, 0.0};
    }
    const TransitionResult tr = world.evaluate(joint_state, joint);
    for (std::size_t i = 0; i < n; ++i) returns[i] += discount_pow * tr.cooperative[i];
    if (tr.any_collision) break;  // collision penalty collected, then stop
    joint_state = tr.next;
    discount_pow *= cfg.discount;
  }
  return returns;
}

SearchResult run_search(const std::vector<VehicleState>& root_state, const World& world,
                        const SearchConfig& cfg, int ego, PredictionMode mode,
                        std::mt19937_64& rng) {
  const std::size_t n = world.agent_count();
  if (root_state.size() != n) {
    throw IndexOutOfRange("root state must cover all " + std::to_string(n) + " agents");
  }
  if (ego < 0 || static_cast<std::size_t>(ego) >= n) {
    throw IndexOutOfRange("ego index " + std::to_string(ego) + " out of range");
  }

  SearchResult result;
  result.planned.assign(n, mode == PredictionMode::kCooperative);
  result.planned[ego] = true;

  SearchContext ctx{world, cfg, result.planned, rng};
  result.root = make_node(std::vector<VehicleState>(root_state), 0, cfg.max_depth <= 0,
                          std::vector<double>(n, 0.0), ctx);
  for (int it = 0; it < cfg.iterations; ++it) simulate(*result.root, ctx);

  result.best.assign(n, Action{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    if (!result.planned[i]) continue;
    const auto& actions = result.root->per_agent[i].actions;

    // Final argmax over q among root actions with n >= 1; ties prefer the
    // higher visit count and then break uniformly.
    double best_q = -std::numeric_limits<double>::infinity();
    double best_n = -1.0;
    std::vector<int> ties;
    for (std::size_t a = 0; a < actions.size(); ++a) {
      if (actions[a].n < 1.0) continue;
      if (actions[a].q > best_q || (actions[a].q == best_q && actions[a].n > best_n)) {
        best_q = actions[a].q;
        best_n = actions[a].n;
        ties.assign(1, static_cast<int>(a));
      } else if (actions[a].q == best_q && actions[a].n == best_n) {
        ties.push_back(static_cast<int>(a));
      }
    }
    int chosen = -1;
    if (!ties.empty()) {
      chosen = pick_with_ties(ties, rng);
      result.best[i] = actions[chosen].action;
    }
    for (std::size_t a = 0; a < actions.size(); ++a) {
      result.root_stats.push_back(RootActionRow{static_cast<int>(i), actions[a].action,
                                                actions[a].n, actions[a].q, actions[a].group,
                                                static_cast<int>(a) == chosen});
    }
  }
  return result;
}

}  // namespace decoc
