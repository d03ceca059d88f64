#ifndef DECOC_SEARCH_CONFIG_HPP
#define DECOC_SEARCH_CONFIG_HPP

#include <cstdint>
#include <string>

namespace decoc {

/// Bounds of the continuous action space.
struct ActionBox {
  double dv_min = -4.0;  // m/s
  double dv_max = 4.0;   // m/s
  double dy_min = -5.0;  // m
  double dy_max = 5.0;   // m

  double dv_center() const { return 0.5 * (dv_min + dv_max); }
  double dy_center() const { return 0.5 * (dy_min + dy_max); }
};

struct SearchConfig {
  int iterations = 20000;     // rollout budget
  int max_depth = 4;          // tree/rollout horizon in action steps
  double discount = 0.9;      // gamma
  double uct_c = 1.25;        // exploration constant (applied to scaled q)
  double pw_c = 2.0;          // progressive-widening coefficient
  double pw_alpha = 0.45;     // progressive-widening exponent, in [0, 1]
  double kernel_gamma = 1.0;  // RBF bandwidth of the similarity kernel
  double kernel_scale_dv = 1.0;  // per-dimension scaling of the action distance
  double kernel_scale_dy = 1.0;
  int bv_candidates = 10;     // |A_rnd| drawn per guided expansion
  int initial_actions_per_agent = 5;
  std::uint64_t seed = 0;

  double action_duration = 2.0;  // delta T (s)
  double sample_dt = 0.1;        // trajectory sample step (s)
  ActionBox box;

  // q is divided by this scale inside UCT comparisons so uct_c stays
  // scenario-independent; raw q is kept for reporting. Sized so the heavy
  // validation penalties land within a few exploration-bonus units.
  double reward_scale = 400.0;

  // Enhancement toggles (all on by default).
  bool use_groups = true;      // two-stage selection over semantic groups
  bool use_guided = true;      // blind-value guided widening
  bool use_similarity = true;  // kernel-weighted backpropagation

  // Blind values as printed combine min-UCT with the similarity kernel; the
  // alternative reading substitutes the scaled Euclidean distance.
  bool bv_use_distance = false;

  double seed_dv_step = 2.0;       // dv magnitude of the seeded discrete set
  double rollout_hold_prob = 0.5;  // rollout probability of the "0" group
};

/// Parses "basic", "guided", "groups", "groups+guided",
/// "groups+guided+similarity" into the three toggles. Throws ParseError on
/// unknown token.
void apply_enhancements(SearchConfig& cfg, const std::string& spec);

std::string enhancements_string(const SearchConfig& cfg);

}  // namespace decoc

#endif  // DECOC_SEARCH_CONFIG_HPP
