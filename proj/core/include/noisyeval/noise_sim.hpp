#pragma once

// Monte Carlo model of a tagger evaluated against a noisy corpus, used as
// an oracle for the closed forms in interval_core.hpp, plus noise injection
// into real tagged corpora.
//
// Reproducibility: every trial draws from its own std::mt19937_64 seeded
// with trial_seed(seed, trial). Uniform variates are taken from the top 53
// bits of the engine output, so results do not depend on the standard
// library's distribution implementations.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "noisyeval/corpus_io.hpp"
#include "noisyeval/interval_core.hpp"

namespace noisyeval {

struct SimulationConfig {
  std::uint64_t n_tokens = 100000;
  double c_corpus = 0.03;
  ParameterTriple params{.t = 0.94, .u = 0.4, .p = 2.0 / 3.0};
  /// Ambiguity ratio of the synthetic corpus; used for random-behaviour
  /// defaults (u = 1/a, p = 1/(a-1)).
  double a = 2.5;
  std::uint64_t seed = 1;
  std::uint64_t trials = 1;

  /// Throws Error(kDomain) on out-of-range fields.
  void validate() const;
};

/// Token counts per evaluation cell.
struct CellCounts {
  std::uint64_t ok_ok = 0;          // corpus ok, tagger ok
  std::uint64_t ok_bad = 0;         // corpus ok, tagger wrong
  std::uint64_t bad_ok = 0;         // corpus wrong, tagger ok
  std::uint64_t bad_bad_same = 0;   // both wrong, same tag
  std::uint64_t bad_bad_diff = 0;   // both wrong, different tags

  std::uint64_t total() const noexcept {
    return ok_ok + ok_bad + bad_ok + bad_bad_same + bad_bad_diff;
  }
  friend bool operator==(const CellCounts&, const CellCounts&) = default;
};

struct SimulationResult {
  std::uint64_t trial = 0;
  CellCounts counts;
  double k_observed_emp = 0.0;  // (ok_ok + bad_bad_same) / n
  double x_true_emp = 0.0;      // (ok_ok + bad_ok) / n

  friend bool operator==(const SimulationResult&,
                         const SimulationResult&) = default;
};

/// splitmix64 finaliser applied to seed mixed with the trial index.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept;

/// One SimulationResult per trial, in trial order. `threads` > 1 runs
/// trials concurrently; output is identical for any thread count.
std::vector<SimulationResult> simulate(const SimulationConfig& config,
                                       unsigned threads = 1);

/// Single trial; what simulate() runs for each trial index.
SimulationResult simulate_trial(const SimulationConfig& config,
                                std::uint64_t trial);

/// Binomial standard deviation sqrt(q (1-q) / n).
double binomial_sigma(double q, std::uint64_t n);

struct ValidationSummary {
  std::uint64_t trials = 0;
  /// Analytic x (from t, u) inside the general interval built from the
  /// analytic K at the true p.
  std::uint64_t analytic_contained = 0;
  /// Sampled x inside the same interval widened by 4 sigma.
  std::uint64_t empirical_contained = 0;
  /// |K_emp - K| <= 4 sigma_K.
  std::uint64_t k_within_4sigma = 0;
  /// |x_emp - x| <= 4 sigma_x.
  std::uint64_t x_within_4sigma = 0;

  double rate(std::uint64_t count) const noexcept {
    return trials ? static_cast<double>(count) / static_cast<double>(trials)
                  : 0.0;
  }
  void merge(const ValidationSummary& other) noexcept;
};

/// Runs simulate(config) and checks every trial against the closed forms.
/// Throws Error(kAssumptionKGreaterC) when the analytic K does not exceed C.
ValidationSummary validate_intervals(const SimulationConfig& config,
                                     unsigned threads = 1);

/// Draws `draws` random feasible configurations (C in [0.005, 0.1],
/// t in [0.8, 1], u and p in [0, 1]) of n tokens and one trial each, and
/// validates all of them.
ValidationSummary validate_random_draws(std::uint64_t draws, std::uint64_t n,
                                        std::uint64_t seed,
                                        unsigned threads = 1);

/// Reads a flat key=value file. Keys: n, c, t, u, p, a, seed, trials.
/// '#' starts a comment. Missing keys keep their defaults.
SimulationConfig parse_simulation_config(std::istream& in,
                                         SimulationConfig base = {});

enum class NoiseMode { kRandom, kSystematic };

struct NoiseInjectionSpec {
  double c_target = 0.0;
  NoiseMode mode = NoiseMode::kRandom;
  /// tag -> replacement tag. A rule fires on an ambiguous token carrying the
  /// source tag whose lexicon set admits the replacement.
  std::map<std::string, std::string> systematic_rules;

  void validate() const;
};

struct InjectionResult {
  TaggedCorpus corpus;
  /// Lexicon-ambiguous tokens; the denominator of the realized rate.
  std::size_t eligible = 0;
  std::size_t altered = 0;

  double realized_rate() const noexcept {
    return eligible ? static_cast<double>(altered) /
                          static_cast<double>(eligible)
                    : 0.0;
  }
};

/// Random: each ambiguous token is retagged, with probability c_target, to
/// a uniformly chosen different tag from its lexicon set.
/// Systematic: round(c_target * eligible) rule-matched tokens, chosen by
/// seeded shuffle, are rewritten by their rule. Throws
/// Error(kSystematicUnreachable) when fewer tokens match.
InjectionResult inject_noise(const TaggedCorpus& corpus,
                             const AmbiguityLexicon& lexicon,
                             const NoiseInjectionSpec& spec,
                             std::uint64_t seed);

}  // namespace noisyeval
