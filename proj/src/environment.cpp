#include "decoc/environment.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "decoc/errors.hpp"
#include "decoc/format.hpp"

namespace decoc {

using nlohmann::json;

const char* to_string(PredictionMode m) {
  return m == PredictionMode::kConstantVelocity ? "constant-velocity" : "cooperative";
}

PredictionMode prediction_mode_from_string(const std::string& s) {
  if (s == "constant-velocity") return PredictionMode::kConstantVelocity;
  if (s == "cooperative") return PredictionMode::kCooperative;
  throw ParseError("unknown prediction mode '" + s +
                   "' (expected constant-velocity or cooperative)");
}

VehicleState to_world_frame(const VehicleState& s, int direction, const RoadModel& road) {
  if (direction >= 0) return s;
  // Rotation by pi about the road center: a rigid transform, so footprints
  // and lanes map onto themselves with the lane order reversed.
  VehicleState w;
  w.x = road.length - s.x;
  w.y = road.width() - s.y;
  w.vx = -s.vx;
  w.vy = -s.vy;
  w.ax = -s.ax;
  w.ay = -s.ay;
  w.heading = std::remainder(s.heading + std::numbers::pi, 2.0 * std::numbers::pi);
  return w;
}

// ---------------------------------------------------------------------------
// World

namespace {

OrientedBox obstacle_box(const Obstacle& o) {
  return OrientedBox{o.x, o.y, 0.5 * o.length, 0.5 * o.width, o.heading};
}

void require_shared_grid(std::span<const Trajectory> trajs) {
  for (std::size_t i = 1; i < trajs.size(); ++i) {
    if (trajs[i].points.size() != trajs[0].points.size()) {
      throw MismatchedSampling("trajectory " + std::to_string(i) + " has " +
                               std::to_string(trajs[i].points.size()) + " samples, expected " +
                               std::to_string(trajs[0].points.size()));
    }
    for (std::size_t k = 0; k < trajs[0].points.size(); ++k) {
      if (std::abs(trajs[i].points[k].t - trajs[0].points[k].t) > 1e-9) {
        throw MismatchedSampling("trajectory " + std::to_string(i) +
                                 " sample grid differs at index " + std::to_string(k));
      }
    }
  }
}

}  // namespace

StepResult World::step(std::span<const VehicleState> states,
                       std::span<const Trajectory> trajectories) const {
  const std::size_t n = sc_.agents.size();
  if (states.size() != n || trajectories.size() != n) {
    throw IndexOutOfRange("step expects one state and trajectory per agent");
  }
  require_shared_grid(trajectories);

  StepResult result;
  result.next.reserve(n);
  result.validation.resize(n);

  for (std::size_t i = 0; i < n; ++i) {
    const AgentSpec& agent = sc_.agents[i];
    ValidationResult& vr = result.validation[i];

    const ValidationResult driv = validate_drivability(trajectories[i], agent.params);
    vr.valid_action = driv.valid_action;
    if (driv.first_violation_time) vr.note_violation(*driv.first_violation_time);

    if (auto t_off = first_off_road_time(trajectories[i], sc_.road, agent.params)) {
      vr.valid_state = false;
      vr.note_violation(*t_off);
    }
    result.next.push_back(trajectories[i].terminal_state());
  }

  // Collision checks run in the world frame so mirrored agents are compared
  // consistently. Boxes are materialized once per agent and sample.
  const std::size_t samples = n > 0 ? trajectories[0].points.size() : 0;
  std::vector<std::vector<OrientedBox>> boxes(n);
  for (std::size_t i = 0; i < n; ++i) {
    boxes[i].reserve(samples);
    const AgentSpec& agent = sc_.agents[i];
    for (const TrajectoryPoint& pt : trajectories[i].points) {
      boxes[i].push_back(footprint(to_world_frame(pt.state, agent.direction, sc_.road),
                                   agent.params));
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < samples; ++k) {
        if (boxes_overlap(boxes[i][k], boxes[j][k])) {
          const double t = trajectories[i].points[k].t;
          result.validation[i].collision = true;
          result.validation[i].note_violation(t);
          result.validation[j].collision = true;
          result.validation[j].note_violation(t);
          result.any_collision = true;
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (const Obstacle& obstacle : sc_.obstacles) {
      if (result.validation[i].collision) break;
      const OrientedBox ob = obstacle_box(obstacle);
      for (std::size_t k = 0; k < samples; ++k) {
        if (boxes_overlap(boxes[i][k], ob)) {
          result.validation[i].collision = true;
          result.validation[i].note_violation(trajectories[i].points[k].t);
          result.any_collision = true;
          break;
        }
      }
    }
  }
  return result;
}

TransitionResult World::evaluate(std::span<const VehicleState> states,
                                 std::span<const Action> actions) const {
  const std::size_t n = sc_.agents.size();
  if (states.size() != n || actions.size() != n) {
    throw IndexOutOfRange("evaluate expects one state and action per agent");
  }
  const double T = sc_.search.action_duration;
  const double dt = sc_.search.sample_dt;

  std::vector<Trajectory> trajs;
  trajs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Action a = actions[i];
    // Reverse motion is out of scope; a braking request past standstill
    // becomes a full stop so the search stays total over the action box.
    if (states[i].vx + a.dv < 0.0) a.dv = -states[i].vx;
    trajs.push_back(action_to_trajectory(states[i], a, T, dt));
  }

  StepResult stepped = step(states, trajs);

  TransitionResult result;
  result.next = std::move(stepped.next);
  result.validation = std::move(stepped.validation);
  result.any_collision = stepped.any_collision;
  result.rewards.resize(n);
  result.cooperative.resize(n);

  std::vector<double> totals(n);
  for (std::size_t i = 0; i < n; ++i) {
    const AgentSpec& agent = sc_.agents[i];
    VehicleState terminal = result.next[i];
    // Off-road successors already pay r_invalid_state; clamp the lateral
    // coordinate so the goal terms stay defined.
    terminal.y = std::clamp(terminal.y, 0.0, sc_.road.width());

    const bool lane_changed = lane_index_clamped(result.next[i].y, sc_.road) !=
                              lane_index_clamped(states[i].y, sc_.road);

    RewardBreakdown& rb = result.rewards[i];
    rb.state = state_reward(terminal, agent.desired, sc_.road, sc_.weights);
    rb.action = action_cost(trajs[i], lane_changed, sc_.weights);
    rb.validation = validation_reward(result.validation[i], sc_.weights);
    totals[i] = immediate_reward(rb.state, rb.action, rb.validation);
  }
  for (std::size_t i = 0; i < n; ++i) {
    result.cooperative[i] = cooperative_reward(totals, i, sc_.agents[i].lambda);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Scenario serialization

namespace {

const json& require_field(const json& j, const char* key, const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError("missing field '" + std::string(key) + "' in " + ctx);
  }
  return *it;
}

double require_number(const json& j, const char* key, const std::string& ctx) {
  const json& v = require_field(j, key, ctx);
  if (!v.is_number()) {
    throw ParseError("field '" + std::string(key) + "' in " + ctx + " must be a number");
  }
  return v.get<double>();
}

double number_or(const json& j, const char* key, double fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  return it->get<double>();
}

json road_to_json(const RoadModel& r) {
  return json{{"lane_count", r.lane_count}, {"lane_width", r.lane_width}, {"length", r.length}};
}

RoadModel road_from_json(const json& j) {
  RoadModel r;
  r.lane_count = static_cast<int>(require_number(j, "lane_count", "road"));
  r.lane_width = require_number(j, "lane_width", "road");
  r.length = require_number(j, "length", "road");
  return r;
}

json state_to_json(const VehicleState& s) {
  return json{{"x", s.x},   {"y", s.y},   {"vx", s.vx},          {"vy", s.vy},
              {"ax", s.ax}, {"ay", s.ay}, {"heading", s.heading}};
}

VehicleState state_from_json(const json& j, const std::string& ctx) {
  VehicleState s;
  s.x = require_number(j, "x", ctx);
  s.y = require_number(j, "y", ctx);
  s.vx = require_number(j, "vx", ctx);
  s.vy = number_or(j, "vy", 0.0);
  s.ax = number_or(j, "ax", 0.0);
  s.ay = number_or(j, "ay", 0.0);
  s.heading = number_or(j, "heading", 0.0);
  return s;
}

json params_to_json(const VehicleParams& p) {
  return json{{"length", p.length},
              {"width", p.width},
              {"wheelbase", p.wheelbase},
              {"max_steering_angle", p.max_steering_angle},
              {"min_turn_radius", p.min_turn_radius},
              {"ax_min", p.ax_min},
              {"ax_max", p.ax_max},
              {"a_lat_max", p.a_lat_max},
              {"kappa_rate_max", p.kappa_rate_max}};
}

VehicleParams params_from_json(const json& j) {
  VehicleParams d;
  VehicleParams p;
  p.length = number_or(j, "length", d.length);
  p.width = number_or(j, "width", d.width);
  p.wheelbase = number_or(j, "wheelbase", d.wheelbase);
  p.max_steering_angle = number_or(j, "max_steering_angle", d.max_steering_angle);
  p.min_turn_radius = number_or(j, "min_turn_radius", d.min_turn_radius);
  p.ax_min = number_or(j, "ax_min", d.ax_min);
  p.ax_max = number_or(j, "ax_max", d.ax_max);
  p.a_lat_max = number_or(j, "a_lat_max", d.a_lat_max);
  p.kappa_rate_max = number_or(j, "kappa_rate_max", d.kappa_rate_max);
  return p;
}

json weights_to_json(const RewardWeights& w) {
  return json{{"w_v", w.w_v},
              {"w_lane", w.w_lane},
              {"w_center", w.w_center},
              {"w_ax", w.w_ax},
              {"w_ay", w.w_ay},
              {"w_lanechange", w.w_lanechange},
              {"r_invalid_state", w.r_invalid_state},
              {"r_invalid_action", w.r_invalid_action},
              {"r_collision", w.r_collision}};
}

RewardWeights weights_from_json(const json& j) {
  RewardWeights d;
  RewardWeights w;
  w.w_v = number_or(j, "w_v", d.w_v);
  w.w_lane = number_or(j, "w_lane", d.w_lane);
  w.w_center = number_or(j, "w_center", d.w_center);
  w.w_ax = number_or(j, "w_ax", d.w_ax);
  w.w_ay = number_or(j, "w_ay", d.w_ay);
  w.w_lanechange = number_or(j, "w_lanechange", d.w_lanechange);
  w.r_invalid_state = number_or(j, "r_invalid_state", d.r_invalid_state);
  w.r_invalid_action = number_or(j, "r_invalid_action", d.r_invalid_action);
  w.r_collision = number_or(j, "r_collision", d.r_collision);
  return w;
}

json search_to_json(const SearchConfig& c) {
  return json{{"iterations", c.iterations},
              {"max_depth", c.max_depth},
              {"discount", c.discount},
              {"uct_c", c.uct_c},
              {"pw_c", c.pw_c},
              {"pw_alpha", c.pw_alpha},
              {"kernel_gamma", c.kernel_gamma},
              {"kernel_scale_dv", c.kernel_scale_dv},
              {"kernel_scale_dy", c.kernel_scale_dy},
              {"bv_candidates", c.bv_candidates},
              {"initial_actions_per_agent", c.initial_actions_per_agent},
              {"seed", c.seed},
              {"action_duration", c.action_duration},
              {"sample_dt", c.sample_dt},
              {"dv_min", c.box.dv_min},
              {"dv_max", c.box.dv_max},
              {"dy_min", c.box.dy_min},
              {"dy_max", c.box.dy_max},
              {"reward_scale", c.reward_scale},
              {"use_groups", c.use_groups},
              {"use_guided", c.use_guided},
              {"use_similarity", c.use_similarity},
              {"bv_use_distance", c.bv_use_distance},
              {"seed_dv_step", c.seed_dv_step},
              {"rollout_hold_prob", c.rollout_hold_prob}};
}

SearchConfig search_from_json(const json& j) {
  SearchConfig d;
  SearchConfig c;
  c.iterations = static_cast<int>(number_or(j, "iterations", d.iterations));
  c.max_depth = static_cast<int>(number_or(j, "max_depth", d.max_depth));
  c.discount = number_or(j, "discount", d.discount);
  c.uct_c = number_or(j, "uct_c", d.uct_c);
  c.pw_c = number_or(j, "pw_c", d.pw_c);
  c.pw_alpha = number_or(j, "pw_alpha", d.pw_alpha);
  c.kernel_gamma = number_or(j, "kernel_gamma", d.kernel_gamma);
  c.kernel_scale_dv = number_or(j, "kernel_scale_dv", d.kernel_scale_dv);
  c.kernel_scale_dy = number_or(j, "kernel_scale_dy", d.kernel_scale_dy);
  c.bv_candidates = static_cast<int>(number_or(j, "bv_candidates", d.bv_candidates));
  c.initial_actions_per_agent =
      static_cast<int>(number_or(j, "initial_actions_per_agent", d.initial_actions_per_agent));
  c.seed = static_cast<std::uint64_t>(number_or(j, "seed", static_cast<double>(d.seed)));
  c.action_duration = number_or(j, "action_duration", d.action_duration);
  c.sample_dt = number_or(j, "sample_dt", d.sample_dt);
  c.box.dv_min = number_or(j, "dv_min", d.box.dv_min);
  c.box.dv_max = number_or(j, "dv_max", d.box.dv_max);
  c.box.dy_min = number_or(j, "dy_min", d.box.dy_min);
  c.box.dy_max = number_or(j, "dy_max", d.box.dy_max);
  c.reward_scale = number_or(j, "reward_scale", d.reward_scale);
  c.use_groups = j.value("use_groups", d.use_groups);
  c.use_guided = j.value("use_guided", d.use_guided);
  c.use_similarity = j.value("use_similarity", d.use_similarity);
  c.bv_use_distance = j.value("bv_use_distance", d.bv_use_distance);
  c.seed_dv_step = number_or(j, "seed_dv_step", d.seed_dv_step);
  c.rollout_hold_prob = number_or(j, "rollout_hold_prob", d.rollout_hold_prob);
  return c;
}

}  // namespace

std::string scenario_to_json(const Scenario& sc) {
  json agents = json::array();
  for (const AgentSpec& a : sc.agents) {
    agents.push_back(json{{"id", a.id},
                          {"name", a.name},
                          {"state", state_to_json(a.initial)},
                          {"params", params_to_json(a.params)},
                          {"desired", json{{"v_des", a.desired.v_des}, {"k_des", a.desired.k_des}}},
                          {"lambda", a.lambda},
                          {"prediction", to_string(a.prediction)},
                          {"direction", a.direction}});
  }
  json obstacles = json::array();
  for (const Obstacle& o : sc.obstacles) {
    obstacles.push_back(json{{"x", o.x},
                             {"y", o.y},
                             {"length", o.length},
                             {"width", o.width},
                             {"heading", o.heading}});
  }
  json j{{"name", sc.name},
         {"road", road_to_json(sc.road)},
         {"obstacles", obstacles},
         {"agents", agents},
         {"weights", weights_to_json(sc.weights)},
         {"search", search_to_json(sc.search)}};
  return j.dump(2);
}

Scenario scenario_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scenario JSON parse error: ") + e.what());
  }
  try {
    Scenario sc;
    sc.name = j.value("name", std::string("unnamed"));
    sc.road = road_from_json(require_field(j, "road", "scenario"));
    if (auto it = j.find("obstacles"); it != j.end()) {
      for (const json& jo : *it) {
        Obstacle o;
        o.x = require_number(jo, "x", "obstacle");
        o.y = require_number(jo, "y", "obstacle");
        o.length = require_number(jo, "length", "obstacle");
        o.width = require_number(jo, "width", "obstacle");
        o.heading = number_or(jo, "heading", 0.0);
        sc.obstacles.push_back(o);
      }
    }
    const json& jagents = require_field(j, "agents", "scenario");
    for (const json& ja : jagents) {
      AgentSpec a;
      a.id = static_cast<int>(require_number(ja, "id", "agent"));
      a.name = ja.value("name", std::string());
      a.initial = state_from_json(require_field(ja, "state", "agent"), "agent state");
      if (auto it = ja.find("params"); it != ja.end()) a.params = params_from_json(*it);
      const json& jd = require_field(ja, "desired", "agent");
      a.desired.v_des = require_number(jd, "v_des", "agent desired");
      a.desired.k_des = static_cast<int>(require_number(jd, "k_des", "agent desired"));
      a.lambda = number_or(ja, "lambda", 0.5);
      a.prediction = prediction_mode_from_string(ja.value("prediction", std::string("cooperative")));
      a.direction = static_cast<int>(number_or(ja, "direction", 1.0));
      sc.agents.push_back(a);
    }
    if (auto it = j.find("weights"); it != j.end()) sc.weights = weights_from_json(*it);
    if (auto it = j.find("search"); it != j.end()) sc.search = search_from_json(*it);
    validate_scenario(sc);
    return sc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed scenario: ") + e.what());
  }
}

void save_scenario(const Scenario& sc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << scenario_to_json(sc) << "\n";
}

std::uint64_t scenario_hash(const Scenario& sc) {
  const std::string text = scenario_to_json(sc);
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Validation and built-ins

void validate_scenario(const Scenario& sc) {
  if (sc.road.lane_count < 1) throw ValidationError("road.lane_count must be >= 1");
  if (!(sc.road.lane_width > 0.0)) throw ValidationError("road.lane_width must be > 0");
  if (!(sc.road.length > 0.0)) throw ValidationError("road.length must be > 0");
  if (sc.agents.empty()) throw ValidationError("scenario needs at least one agent");
  if (!(sc.search.action_duration > 0.0)) throw ValidationError("search.action_duration must be > 0");
  if (!(sc.search.sample_dt > 0.0) || sc.search.sample_dt > sc.search.action_duration) {
    throw ValidationError("search.sample_dt must be in (0, action_duration]");
  }
  if (sc.search.discount < 0.0 || sc.search.discount > 1.0) {
    throw ValidationError("search.discount must be in [0, 1]");
  }
  if (sc.search.pw_alpha < 0.0 || sc.search.pw_alpha > 1.0) {
    throw ValidationError("search.pw_alpha must be in [0, 1]");
  }
  if (!(sc.search.kernel_gamma > 0.0)) throw ValidationError("search.kernel_gamma must be > 0");
  if (sc.search.box.dv_min >= sc.search.box.dv_max ||
      sc.search.box.dy_min >= sc.search.box.dy_max) {
    throw ValidationError("search action box must have positive extent");
  }

  std::vector<OrientedBox> world_boxes;
  for (std::size_t i = 0; i < sc.agents.size(); ++i) {
    const AgentSpec& a = sc.agents[i];
    const std::string who = "agent " + (a.name.empty() ? std::to_string(a.id) : a.name);
    for (std::size_t k = 0; k < i; ++k) {
      if (sc.agents[k].id == a.id) throw ValidationError("duplicate agent id " + std::to_string(a.id));
    }
    if (a.lambda < 0.0 || a.lambda > 1.0) throw ValidationError(who + ": lambda outside [0, 1]");
    if (a.initial.vx < 0.0) throw ValidationError(who + ": vx must be >= 0");
    if (a.desired.v_des < 0.0) throw ValidationError(who + ": v_des must be >= 0");
    if (a.desired.k_des < 0 || a.desired.k_des >= sc.road.lane_count) {
      throw ValidationError(who + ": k_des outside the road's lanes");
    }
    if (a.direction != 1 && a.direction != -1) throw ValidationError(who + ": direction must be +-1");
    if (!(a.params.length > 0.0) || !(a.params.width > 0.0) || !(a.params.wheelbase > 0.0)) {
      throw ValidationError(who + ": vehicle dimensions must be positive");
    }
    if (!(a.params.ax_min < 0.0) || !(a.params.ax_max > 0.0)) {
      throw ValidationError(who + ": acceleration bounds need ax_min < 0 < ax_max");
    }

    const VehicleState w = to_world_frame(a.initial, a.direction, sc.road);
    const OrientedBox box = footprint(w, a.params);
    const double extent = box.half_length * std::abs(std::sin(box.heading)) +
                          box.half_width * std::abs(std::cos(box.heading));
    if (box.cy - extent < 0.0 || box.cy + extent > sc.road.width()) {
      throw ValidationError(who + ": initial footprint leaves the road");
    }
    world_boxes.push_back(box);
  }
  for (const Obstacle& o : sc.obstacles) {
    const OrientedBox box = obstacle_box(o);
    const double extent = box.half_length * std::abs(std::sin(box.heading)) +
                          box.half_width * std::abs(std::cos(box.heading));
    if (box.cy - extent < 0.0 || box.cy + extent > sc.road.width()) {
      throw ValidationError("obstacle footprint leaves the road");
    }
  }
  for (std::size_t i = 0; i < world_boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < world_boxes.size(); ++j) {
      if (boxes_overlap(world_boxes[i], world_boxes[j])) {
        throw ValidationError("agents " + std::to_string(i) + " and " + std::to_string(j) +
                              " start in collision");
      }
    }
    for (const Obstacle& o : sc.obstacles) {
      if (boxes_overlap(world_boxes[i], obstacle_box(o))) {
        throw ValidationError("agent " + std::to_string(i) + " starts inside an obstacle");
      }
    }
  }
}

Scenario make_bottleneck() {
  Scenario sc;
  sc.name = "bottleneck";
  sc.road = RoadModel{2, 3.5, 150.0};

  // Parked vehicles narrow the right lane; the oncoming agent has to make
  // room so both can pass the constriction at the same time.
  sc.obstacles.push_back(Obstacle{70.0, 1.0, 5.0, 1.8, 0.0});
  sc.obstacles.push_back(Obstacle{78.0, 1.0, 5.0, 1.8, 0.0});

  AgentSpec green;
  green.id = 0;
  green.name = "green";
  green.initial = VehicleState{10.0, 1.75, 8.0, 0.0, 0.0, 0.0, 0.0};
  green.desired = DesiredState{8.0, 0};
  green.lambda = 0.5;
  green.direction = +1;

  AgentSpec red;
  red.id = 1;
  red.name = "red";
  red.initial = VehicleState{10.0, 1.75, 8.0, 0.0, 0.0, 0.0, 0.0};  // own frame
  red.desired = DesiredState{8.0, 0};
  red.lambda = 0.5;
  red.direction = -1;

  sc.agents = {green, red};
  validate_scenario(sc);
  return sc;
}

Scenario make_merge_in() {
  Scenario sc;
  sc.name = "merge-in";
  sc.road = RoadModel{2, 3.5, 200.0};

  // The green agent's lane is blocked 40 m ahead; the moving lane carries a
  // two-vehicle platoon with a 20 m gap approaching from behind.
  sc.obstacles.push_back(Obstacle{70.0, 1.75, 6.0, 2.0, 0.0});

  VehicleParams params;
  params.ax_max = 2.5;  // keeps outrunning the platoon infeasible

  AgentSpec green;
  green.id = 0;
  green.name = "green";
  green.initial = VehicleState{30.0, 1.75, 8.0, 0.0, 0.0, 0.0, 0.0};
  green.desired = DesiredState{8.0, 0};
  green.params = params;
  green.lambda = 0.5;

  AgentSpec blue;
  blue.id = 1;
  blue.name = "blue";
  blue.initial = VehicleState{22.0, 5.25, 10.0, 0.0, 0.0, 0.0, 0.0};
  blue.desired = DesiredState{10.0, 1};
  blue.params = params;
  blue.lambda = 0.5;

  AgentSpec red;
  red.id = 2;
  red.name = "red";
  red.initial = VehicleState{2.0, 5.25, 10.0, 0.0, 0.0, 0.0, 0.0};
  red.desired = DesiredState{10.0, 1};
  red.params = params;
  red.lambda = 0.5;

  sc.agents = {green, blue, red};
  validate_scenario(sc);
  return sc;
}

Scenario load_scenario(const std::string& name_or_path) {
  if (name_or_path == "bottleneck") return make_bottleneck();
  if (name_or_path == "merge-in") return make_merge_in();
  std::ifstream in(name_or_path);
  if (!in) {
    throw ParseError("unknown scenario '" + name_or_path +
                     "' (built-ins: bottleneck, merge-in; otherwise a JSON file path)");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return scenario_from_json(buf.str());
}

}  // namespace decoc
