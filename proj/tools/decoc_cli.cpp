// Command-line driver for scenario runs, prediction-mode comparisons and
// root-node exploration dumps. Output files are plain CSV so velocity,
// position and action-density plots can be produced by any external tool.

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "decoc/environment.hpp"
#include "decoc/errors.hpp"
#include "decoc/format.hpp"
#include "decoc/search.hpp"
#include "decoc/sim.hpp"

namespace {

enum class LogLevel { kError = 0, kInfo = 1, kDebug = 2 };

LogLevel log_level() {
  const char* env = std::getenv("DECOC_LOG");
  if (env == nullptr) return LogLevel::kError;
  const std::string v(env);
  if (v == "debug") return LogLevel::kDebug;
  if (v == "info") return LogLevel::kInfo;
  return LogLevel::kError;
}

void log_info(const std::string& msg) {
  if (log_level() >= LogLevel::kInfo) std::cerr << "[info] " << msg << "\n";
}

void log_debug(const std::string& msg) {
  if (log_level() >= LogLevel::kDebug) std::cerr << "[debug] " << msg << "\n";
}

struct CommonOptions {
  std::string scenario;
  std::string prediction;
  int iterations = -1;  // -1 keeps the scenario default
  std::uint64_t seed = 0;
  int steps = 15;
};

std::optional<decoc::PredictionMode> mode_override(const std::string& prediction) {
  if (prediction.empty()) return std::nullopt;
  return decoc::prediction_mode_from_string(prediction);
}

decoc::SearchConfig effective_config(const decoc::Scenario& sc, int iterations) {
  decoc::SearchConfig cfg = sc.search;
  if (iterations > 0) cfg.iterations = iterations;
  return cfg;
}

void print_metrics(const decoc::SimulationTrace& trace, const decoc::Metrics& m,
                   const std::string& prediction) {
  std::cout << "scenario            " << trace.scenario_name << "\n";
  std::cout << "prediction          " << prediction << "\n";
  std::cout << "steps completed     " << m.steps_completed << "\n";
  std::cout << "velocity deviation  " << decoc::format_double(m.velocity_deviation) << " m\n";
  std::cout << "collisions          " << m.collision_count << "\n";
  for (std::size_t i = 0; i < m.min_speed.size(); ++i) {
    std::cout << "min speed " << trace.agent_names[i] << "  "
              << decoc::format_double(m.min_speed[i]) << " m/s\n";
  }
  std::cout << "metrics scenario=" << trace.scenario_name << " prediction=" << prediction
            << " steps_completed=" << m.steps_completed
            << " velocity_deviation=" << decoc::format_double(m.velocity_deviation)
            << " collision_count=" << m.collision_count;
  for (std::size_t i = 0; i < m.min_speed.size(); ++i) {
    std::cout << " min_speed_" << trace.agent_names[i] << "="
              << decoc::format_double(m.min_speed[i]);
  }
  std::cout << "\n";
}

int cmd_run(const CommonOptions& opt, const std::string& out_path) {
  const decoc::Scenario sc = decoc::load_scenario(opt.scenario);
  const decoc::SearchConfig cfg = effective_config(sc, opt.iterations);
  const auto mode = mode_override(opt.prediction);
  log_info("running scenario '" + sc.name + "' for " + std::to_string(opt.steps) + " steps");

  const decoc::SimulationTrace trace = decoc::run(sc, opt.steps, cfg, opt.seed, mode);
  decoc::write_trace_csv(trace, out_path);
  log_debug("trace written to " + out_path);

  const decoc::Metrics m = decoc::compute_metrics(trace);
  print_metrics(trace, m, mode ? decoc::to_string(*mode) : "scenario-default");
  return 0;
}

int cmd_explore(const CommonOptions& opt, const std::string& enhancements,
                const std::string& dump_path) {
  const decoc::Scenario sc = decoc::load_scenario(opt.scenario);

  // Advance to the analyzed step with the scenario-default planner so the
  // enhancement toggles change only the analyzed search, never the state.
  std::vector<decoc::VehicleState> state;
  for (const auto& a : sc.agents) state.push_back(a.initial);
  if (opt.steps > 0) {
    const decoc::SimulationTrace prefix = decoc::run(sc, opt.steps, sc.search, opt.seed);
    state = prefix.final_states;
    if (prefix.ended_in_collision) {
      std::cerr << "warning: advance phase ended in a collision\n";
    }
  }

  decoc::SearchConfig cfg = effective_config(sc, opt.iterations);
  decoc::apply_enhancements(cfg, enhancements);
  const auto mode = mode_override(opt.prediction);

  decoc::World world(sc);
  std::mt19937_64 rng(opt.seed ^ 0xd1b54a32d192ed03ull);
  const decoc::SearchResult res =
      decoc::run_search(state, world, cfg, 0,
                        mode.value_or(decoc::PredictionMode::kCooperative), rng);

  decoc::write_explore_csv(res.root_stats, decoc::scenario_hash(sc), enhancements, dump_path);
  for (std::size_t i = 0; i < res.best.size(); ++i) {
    if (!res.planned[i]) continue;
    std::cout << "agent " << i << " selected dv=" << decoc::format_double(res.best[i].dv)
              << " dy=" << decoc::format_double(res.best[i].dy) << " group="
              << decoc::to_string(decoc::assign_action_group(state[i], res.best[i], sc.road))
              << "\n";
  }
  log_info("root dump written to " + dump_path);
  return 0;
}

int cmd_compare(const CommonOptions& opt, int seed_count) {
  const decoc::Scenario sc = decoc::load_scenario(opt.scenario);
  const decoc::SearchConfig cfg = effective_config(sc, opt.iterations);

  struct Job {
    decoc::PredictionMode mode;
    std::uint64_t seed;
    decoc::Metrics metrics;
  };
  std::vector<Job> jobs;
  for (decoc::PredictionMode mode :
       {decoc::PredictionMode::kConstantVelocity, decoc::PredictionMode::kCooperative}) {
    for (int s = 0; s < seed_count; ++s) jobs.push_back(Job{mode, opt.seed + s, {}});
  }

  // Runs are independent (each owns its RNG streams); order of completion
  // does not matter because output is emitted by seed afterwards.
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t j = next.fetch_add(1); j < jobs.size(); j = next.fetch_add(1)) {
      const decoc::SimulationTrace trace =
          decoc::run(sc, opt.steps, cfg, jobs[j].seed, jobs[j].mode);
      jobs[j].metrics = decoc::compute_metrics(trace);
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < hw; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::cout << "mode,seed,velocity_deviation,collision_count,steps_completed";
  for (const auto& a : sc.agents) {
    std::cout << ",min_speed_" << (a.name.empty() ? std::to_string(a.id) : a.name);
  }
  std::cout << "\n";
  for (const Job& j : jobs) {
    std::cout << decoc::to_string(j.mode) << "," << j.seed << ","
              << decoc::format_double(j.metrics.velocity_deviation) << ","
              << j.metrics.collision_count << "," << j.metrics.steps_completed;
    for (double v : j.metrics.min_speed) std::cout << "," << decoc::format_double(v);
    std::cout << "\n";
  }
  std::cout << "# summary\nmode,runs,mean_velocity_deviation,total_collisions\n";
  for (decoc::PredictionMode mode :
       {decoc::PredictionMode::kConstantVelocity, decoc::PredictionMode::kCooperative}) {
    double dev = 0.0;
    int collisions = 0;
    for (const Job& j : jobs) {
      if (j.mode != mode) continue;
      dev += j.metrics.velocity_deviation;
      collisions += j.metrics.collision_count;
    }
    std::cout << decoc::to_string(mode) << "," << seed_count << ","
              << decoc::format_double(dev / seed_count) << "," << collisions << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decoc: decentralized cooperative continuous-action trajectory planning"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string out_path = "trace.csv";
  std::string dump_path = "root_actions.csv";
  std::string enhancements = "groups+guided+similarity";
  int seed_count = 10;

  CLI::App* run = app.add_subcommand("run", "simulate a scenario and write the trace");
  run->add_option("--scenario", opt.scenario, "built-in name or JSON path")->required();
  run->add_option("--prediction", opt.prediction,
                  "constant-velocity|cooperative (default: per-agent scenario setting)");
  run->add_option("--iterations", opt.iterations, "search iterations per plan");
  run->add_option("--seed", opt.seed, "base RNG seed");
  run->add_option("--steps", opt.steps, "simulation steps");
  run->add_option("--out", out_path, "trace CSV path");

  CLI::App* explore = app.add_subcommand(
      "explore", "dump every root-explored action of a single search");
  explore->add_option("--scenario", opt.scenario, "built-in name or JSON path")->required();
  explore->add_option("--prediction", opt.prediction, "prediction mode of the analyzed search");
  explore->add_option("--iterations", opt.iterations, "search iterations");
  explore->add_option("--seed", opt.seed, "base RNG seed");
  explore->add_option("--steps", opt.steps,
                      "steps to advance with scenario defaults before analyzing")
      ->default_val(0);
  explore->add_option("--enhancements", enhancements,
                      "basic|guided|groups|groups+guided|groups+guided+similarity");
  explore->add_option("--dump", dump_path, "root-action dump CSV path");

  CLI::App* compare =
      app.add_subcommand("compare", "run both prediction modes over several seeds");
  compare->add_option("--scenario", opt.scenario, "built-in name or JSON path")->required();
  compare->add_option("--iterations", opt.iterations, "search iterations per plan");
  compare->add_option("--seed", opt.seed, "base RNG seed");
  compare->add_option("--seeds", seed_count, "number of seeds per mode");
  compare->add_option("--steps", opt.steps, "simulation steps");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(opt, out_path);
    if (explore->parsed()) return cmd_explore(opt, enhancements, dump_path);
    if (compare->parsed()) return cmd_compare(opt, seed_count);
    return 2;
  } catch (const decoc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const decoc::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
