#include "decoc/sim.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "decoc/errors.hpp"
#include "decoc/format.hpp"

namespace decoc {

SimulationTrace run(const Scenario& scenario, int steps, const SearchConfig& cfg,
                    std::uint64_t seed, std::optional<PredictionMode> mode_override) {
  if (steps < 1) throw IndexOutOfRange("simulation needs steps >= 1");
  validate_scenario(scenario);

  const std::size_t n = scenario.agents.size();
  World world(scenario);

  SimulationTrace trace;
  trace.scenario_name = scenario.name;
  trace.agent_count = static_cast<int>(n);
  trace.delta_t = cfg.action_duration;
  for (const AgentSpec& a : scenario.agents) {
    trace.v_des.push_back(a.desired.v_des);
    trace.agent_names.push_back(a.name.empty() ? std::to_string(a.id) : a.name);
  }

  // One RNG stream per agent keeps the decentralized searches decorrelated
  // yet reproducible.
  std::vector<std::mt19937_64> rngs;
  rngs.reserve(n);
  for (const AgentSpec& a : scenario.agents) {
    rngs.emplace_back(seed + static_cast<std::uint64_t>(a.id));
  }

  std::vector<VehicleState> states;
  states.reserve(n);
  for (const AgentSpec& a : scenario.agents) states.push_back(a.initial);

  double time = 0.0;
  for (int step = 0; step < steps; ++step) {
    // Every agent replans on the shared joint state with its own prediction
    // mode; plans are not exchanged, only each agent's own first action is
    // executed.
    std::vector<Action> chosen(n, Action{0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) {
      const PredictionMode mode =
          mode_override ? *mode_override : scenario.agents[i].prediction;
      SearchResult res =
          run_search(states, world, cfg, static_cast<int>(i), mode, rngs[i]);
      chosen[i] = res.best[i];
    }

    TransitionResult tr = world.evaluate(states, chosen);

    StepRecord rec;
    rec.step = step;
    rec.time = time;
    rec.states = states;
    rec.actions = chosen;
    rec.groups.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      rec.groups.push_back(assign_action_group(states[i], chosen[i], scenario.road));
    }
    rec.rewards = tr.rewards;
    rec.validation = tr.validation;
    trace.steps.push_back(std::move(rec));

    states = tr.next;
    time += cfg.action_duration;
    if (tr.any_collision) {
      trace.ended_in_collision = true;
      break;
    }
  }
  trace.final_states = states;
  trace.final_time = time;
  return trace;
}

Metrics compute_metrics(const SimulationTrace& trace) {
  Metrics m;
  const std::size_t n = static_cast<std::size_t>(trace.agent_count);
  m.min_speed.assign(n, std::numeric_limits<double>::infinity());
  m.steps_completed = static_cast<int>(trace.steps.size());

  for (std::size_t i = 0; i < n; ++i) {
    // Trapezoid over the logged states (step starts plus the final state).
    double integral = 0.0;
    double prev_dev = 0.0;
    bool have_prev = false;
    auto feed = [&](const VehicleState& s) {
      const double dev = std::abs(s.vx - trace.v_des[i]);
      if (have_prev) integral += 0.5 * (prev_dev + dev) * trace.delta_t;
      prev_dev = dev;
      have_prev = true;
      m.min_speed[i] = std::min(m.min_speed[i], s.vx);
    };
    for (const StepRecord& rec : trace.steps) feed(rec.states[i]);
    if (!trace.final_states.empty()) feed(trace.final_states[i]);
    m.velocity_deviation += integral;
  }
  for (const StepRecord& rec : trace.steps) {
    for (const ValidationResult& vr : rec.validation) {
      if (vr.collision) ++m.collision_count;
    }
  }
  return m;
}

void write_trace_csv(const SimulationTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << "# scenario=" << trace.scenario_name << "\n";
  out << "step,time,agent,x,y,vx,vy,ax,ay,heading,action_dv,action_dy,group,"
         "r_state,r_action,r_validation,valid_state,valid_action,collision\n";
  auto state_fields = [&](const VehicleState& s) {
    return format_double(s.x) + "," + format_double(s.y) + "," + format_double(s.vx) + "," +
           format_double(s.vy) + "," + format_double(s.ax) + "," + format_double(s.ay) + "," +
           format_double(s.heading);
  };
  for (const StepRecord& rec : trace.steps) {
    for (int i = 0; i < trace.agent_count; ++i) {
      const ValidationResult& vr = rec.validation[i];
      out << rec.step << "," << format_double(rec.time) << "," << trace.agent_names[i] << ","
          << state_fields(rec.states[i]) << "," << format_double(rec.actions[i].dv) << ","
          << format_double(rec.actions[i].dy) << "," << to_string(rec.groups[i]) << ","
          << format_double(rec.rewards[i].state) << "," << format_double(rec.rewards[i].action)
          << "," << format_double(rec.rewards[i].validation) << "," << (vr.valid_state ? 1 : 0)
          << "," << (vr.valid_action ? 1 : 0) << "," << (vr.collision ? 1 : 0) << "\n";
    }
  }
  // Final states close the trace; action and reward fields stay empty.
  for (int i = 0; i < trace.agent_count; ++i) {
    out << trace.steps.size() << "," << format_double(trace.final_time) << ","
        << trace.agent_names[i] << "," << state_fields(trace.final_states[i])
        << ",,,,,,,,,\n";
  }
}

void write_explore_csv(const std::vector<RootActionRow>& rows, std::uint64_t scenario_hash,
                       const std::string& enhancements, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  char hash_hex[17];
  std::snprintf(hash_hex, sizeof(hash_hex), "%016llx",
                static_cast<unsigned long long>(scenario_hash));
  out << "# scenario_hash=" << hash_hex << "\n";
  out << "# enhancements=" << enhancements << "\n";
  out << "agent,dv,dy,n,q,group,selected\n";
  for (const RootActionRow& r : rows) {
    out << r.agent << "," << format_double(r.action.dv) << "," << format_double(r.action.dy)
        << "," << format_double(r.n) << "," << format_double(r.q) << "," << to_string(r.group)
        << "," << (r.selected ? 1 : 0) << "\n";
  }
}

}  // namespace decoc
