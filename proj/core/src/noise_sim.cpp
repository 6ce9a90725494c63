#include "noisyeval/noise_sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "noisyeval/error.hpp"

namespace noisyeval {
namespace {

using Engine = std::mt19937_64;

double unit(Engine& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t pick_index(Engine& rng, std::size_t n) {
  return std::min(n - 1, static_cast<std::size_t>(unit(rng) * n));
}

// Runs fn(i) for i in [0, count) on up to `threads` workers, striding the
// index space so every worker touches a disjoint set of slots.
template <typename Fn>
void parallel_for(std::uint64_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const auto workers =
      static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&fn, w, workers, count] {
      for (std::uint64_t i = w; i < count; i += workers) fn(i);
    });
  }
}

bool within(double emp, double expected, double sigma) {
  return std::abs(emp - expected) <= 4.0 * sigma;
}

ValidationSummary check_trial(const SimulationConfig& config,
                              const SimulationResult& r,
                              const EvalObservation& obs) {
  const double x = real_from_params(config.c_corpus, config.params);
  const PerformanceInterval iv = real_performance_interval(obs, config.params.p);
  const double sigma_k = binomial_sigma(obs.k(), config.n_tokens);
  const double sigma_x = binomial_sigma(x, config.n_tokens);

  ValidationSummary s;
  s.trials = 1;
  s.analytic_contained = iv.range().contains(x, kConsistencyEpsilon) ? 1 : 0;
  s.empirical_contained =
      iv.range().contains(r.x_true_emp, 4.0 * sigma_x) ? 1 : 0;
  s.k_within_4sigma = within(r.k_observed_emp, obs.k(), sigma_k) ? 1 : 0;
  s.x_within_4sigma = within(r.x_true_emp, x, sigma_x) ? 1 : 0;
  return s;
}

double parse_number(const std::string& key, const std::string& value,
                    std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kConfig,
              fmt::format("line {}: value '{}' for '{}' is not a number",
                          line_no, value, key));
}

}  // namespace

void SimulationConfig::validate() const {
  if (n_tokens < 1) throw Error(ErrorCode::kDomain, "n_tokens must be >= 1");
  if (trials < 1) throw Error(ErrorCode::kDomain, "trials must be >= 1");
  if (!std::isfinite(c_corpus) || c_corpus < 0.0 || c_corpus > 1.0) {
    throw Error(ErrorCode::kDomain,
                fmt::format("C must be a fraction in [0,1], got {}", c_corpus));
  }
  params.validate();
  AmbiguityProfile::create(a);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double binomial_sigma(double q, std::uint64_t n) {
  return std::sqrt(std::max(0.0, q * (1.0 - q)) / static_cast<double>(n));
}

SimulationResult simulate_trial(const SimulationConfig& config,
                                std::uint64_t trial) {
  Engine rng(trial_seed(config.seed, trial));
  const double clean = 1.0 - config.c_corpus;
  const auto& prm = config.params;

  SimulationResult r;
  r.trial = trial;
  CellCounts& c = r.counts;
  for (std::uint64_t i = 0; i < config.n_tokens; ++i) {
    if (unit(rng) < clean) {
      if (unit(rng) < prm.t) {
        ++c.ok_ok;
      } else {
        ++c.ok_bad;
      }
    } else if (unit(rng) < prm.u) {
      ++c.bad_ok;
    } else if (unit(rng) < prm.p) {
      ++c.bad_bad_same;
    } else {
      ++c.bad_bad_diff;
    }
  }
  const auto n = static_cast<double>(config.n_tokens);
  r.k_observed_emp = static_cast<double>(c.ok_ok + c.bad_bad_same) / n;
  r.x_true_emp = static_cast<double>(c.ok_ok + c.bad_ok) / n;
  return r;
}

std::vector<SimulationResult> simulate(const SimulationConfig& config,
                                       unsigned threads) {
  config.validate();
  std::vector<SimulationResult> out(config.trials);
  parallel_for(config.trials, threads, [&](std::uint64_t i) {
    out[i] = simulate_trial(config, i);
  });
  return out;
}

void ValidationSummary::merge(const ValidationSummary& other) noexcept {
  trials += other.trials;
  analytic_contained += other.analytic_contained;
  empirical_contained += other.empirical_contained;
  k_within_4sigma += other.k_within_4sigma;
  x_within_4sigma += other.x_within_4sigma;
}

ValidationSummary validate_intervals(const SimulationConfig& config,
                                     unsigned threads) {
  config.validate();
  const auto obs = EvalObservation::create(
      observed_from_params(config.c_corpus, config.params), config.c_corpus);
  ValidationSummary total;
  for (const auto& r : simulate(config, threads)) {
    total.merge(check_trial(config, r, obs));
  }
  return total;
}

ValidationSummary validate_random_draws(std::uint64_t draws, std::uint64_t n,
                                        std::uint64_t seed, unsigned threads) {
  if (draws < 1) throw Error(ErrorCode::kDomain, "draws must be >= 1");
  if (n < 1) throw Error(ErrorCode::kDomain, "n must be >= 1");

  // Draw all configurations up front so they do not depend on threading.
  Engine master(seed);
  std::vector<SimulationConfig> configs;
  configs.reserve(draws);
  while (configs.size() < draws) {
    SimulationConfig cfg;
    cfg.n_tokens = n;
    cfg.trials = 1;
    cfg.c_corpus = 0.005 + 0.095 * unit(master);
    cfg.params.t = 0.8 + 0.2 * unit(master);
    cfg.params.u = unit(master);
    cfg.params.p = unit(master);
    cfg.seed = trial_seed(seed, configs.size());
    if (observed_from_params(cfg.c_corpus, cfg.params) > cfg.c_corpus) {
      configs.push_back(cfg);
    }
  }

  std::vector<ValidationSummary> parts(draws);
  parallel_for(draws, threads, [&](std::uint64_t i) {
    const auto& cfg = configs[i];
    const auto obs = EvalObservation::create(
        observed_from_params(cfg.c_corpus, cfg.params), cfg.c_corpus);
    parts[i] = check_trial(cfg, simulate_trial(cfg, 0), obs);
  });
  ValidationSummary total;
  for (const auto& s : parts) total.merge(s);
  return total;
}

SimulationConfig parse_simulation_config(std::istream& in,
                                         SimulationConfig base) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kConfig,
                  fmt::format("line {}: expected key=value", line_no));
    }
    auto strip = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    const double v = parse_number(key, value, line_no);
    auto as_count = [&](double d) {
      if (d < 0 || d != std::floor(d)) {
        throw Error(ErrorCode::kConfig,
                    fmt::format("line {}: '{}' must be a non-negative integer",
                                line_no, key));
      }
      return static_cast<std::uint64_t>(d);
    };
    if (key == "n") {
      base.n_tokens = as_count(v);
    } else if (key == "c") {
      base.c_corpus = v;
    } else if (key == "t") {
      base.params.t = v;
    } else if (key == "u") {
      base.params.u = v;
    } else if (key == "p") {
      base.params.p = v;
    } else if (key == "a") {
      base.a = v;
    } else if (key == "seed") {
      base.seed = std::stoull(value);
    } else if (key == "trials") {
      base.trials = as_count(v);
    } else {
      throw Error(ErrorCode::kConfig,
                  fmt::format("line {}: unknown key '{}'", line_no, key));
    }
  }
  return base;
}

void NoiseInjectionSpec::validate() const {
  if (!std::isfinite(c_target) || c_target < 0.0 || c_target > 1.0) {
    throw Error(ErrorCode::kDomain,
                fmt::format("c_target must be in [0,1], got {}", c_target));
  }
  if (mode == NoiseMode::kSystematic && systematic_rules.empty()) {
    throw Error(ErrorCode::kDomain, "systematic noise needs at least one rule");
  }
}

InjectionResult inject_noise(const TaggedCorpus& corpus,
                             const AmbiguityLexicon& lexicon,
                             const NoiseInjectionSpec& spec,
                             std::uint64_t seed) {
  spec.validate();
  Engine rng(trial_seed(seed, 0));
  InjectionResult out;
  out.corpus = corpus;
  auto& tokens = out.corpus.tokens;

  if (spec.mode == NoiseMode::kRandom) {
    std::vector<const std::string*> choices;
    for (auto& tok : tokens) {
      const auto* tags = lexicon.find(tok.surface);
      if (!tags || tags->size() < 2) continue;
      ++out.eligible;
      if (!(unit(rng) < spec.c_target)) continue;
      choices.clear();
      for (const auto& tag : *tags) {
        if (tag != tok.tag) choices.push_back(&tag);
      }
      tok.tag = *choices[pick_index(rng, choices.size())];
      ++out.altered;
    }
    return out;
  }

  std::vector<std::size_t> matched;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto* tags = lexicon.find(tokens[i].surface);
    if (!tags || tags->size() < 2) continue;
    ++out.eligible;
    const auto rule = spec.systematic_rules.find(tokens[i].tag);
    if (rule != spec.systematic_rules.end() && rule->second != rule->first &&
        tags->contains(rule->second)) {
      matched.push_back(i);
    }
  }
  const auto target = static_cast<std::size_t>(
      std::llround(spec.c_target * static_cast<double>(out.eligible)));
  if (target > matched.size()) {
    throw Error(ErrorCode::kSystematicUnreachable,
                fmt::format("target of {} errors exceeds the {} tokens the "
                            "rules can alter",
                            target, matched.size()));
  }
  // Fisher-Yates with the portable uniform above.
  for (std::size_t i = matched.size(); i > 1; --i) {
    std::swap(matched[i - 1], matched[pick_index(rng, i)]);
  }
  for (std::size_t j = 0; j < target; ++j) {
    auto& tok = tokens[matched[j]];
    tok.tag = spec.systematic_rules.at(tok.tag);
  }
  out.altered = target;
  return out;
}

}  // namespace noisyeval
