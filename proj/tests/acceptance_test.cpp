// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <fmt/core.h>

#include "cli.hpp"
#include "noisyeval/corpus_io.hpp"
#include "noisyeval/error.hpp"
#include "noisyeval/interval_core.hpp"
#include "noisyeval/noise_sim.hpp"
#include "noisyeval/tagger_compare.hpp"
#include "oracles/grid_oracle.hpp"

using namespace noisyeval;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Check {
  Outcome& o;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      o.pass = false;
      if (!o.detail.empty()) o.detail += "; ";
      o.detail += what;
    }
  }
};

std::string run_cli(std::vector<std::string> args, int& status) {
  std::ostringstream out, err;
  status = cli::run(args, out, err);
  return out.str() + err.str();
}

unsigned threads() {
  return std::max(1u, std::thread::hardware_concurrency());
}

// 1. Worked example at both ends of p.
Outcome worked_example() {
  Outcome o;
  Check chk{o};
  int status = 0;
  const auto p0 = run_cli({"interval", "--k", "0.93", "--c", "0.03", "--p", "0"}, status);
  chk.require(status == 0 && p0 == "x ∈ [93.00%, 96.00%]\n", "p=0 gave: " + p0);
  const auto p1 = run_cli({"interval", "--k", "0.93", "--c", "0.03", "--p", "1"}, status);
  chk.require(status == 0 && p1 == "x ∈ [90.00%, 96.00%]\n", "p=1 gave: " + p1);
  const auto both = run_cli({"interval", "--k", "0.93", "--c", "0.03"}, status);
  chk.require(status == 0 &&
                  both == "p=0: x ∈ [93.00%, 96.00%]\np=1: x ∈ [90.00%, 96.00%]\n",
              "sweep ends gave: " + both);
  return o;
}

// 2. t bounds.
Outcome t_bounds() {
  Outcome o;
  Check chk{o};
  int status = 0;
  const auto text = run_cli({"bounds", "--k", "0.93", "--c", "0.03"}, status);
  chk.require(status == 0 && text.rfind("t ∈ [92.78%, 95.88%]\n", 0) == 0,
              "bounds gave: " + text);
  const auto b = parameter_bounds(EvalObservation::create(0.93, 0.03));
  chk.require(std::round(b.t.lo * 1000) == 928 && std::round(b.t.hi * 1000) == 959,
              fmt::format("t = [{}, {}]", b.t.lo, b.t.hi));
  return o;
}

// 3. Two-tagger reference comparison.
Outcome reference_comparison() {
  Outcome o;
  Check chk{o};
  constexpr double kTol = 5e-5;
  const auto amb = AmbiguityProfile::create(2.5);
  const TaggerEvalCase t1{"T1", EvalObservation::create(0.9135, 0.03), amb};
  const TaggerEvalCase t2{"T2", EvalObservation::create(0.9282, 0.03), amb};
  struct Expected {
    double p, lo1, hi1, lo2, hi2;
  };
  double worst = 0;
  for (const Expected& e : {Expected{1.0, 0.9075, 0.9399, 0.9222, 0.9555},
                            Expected{2.0 / 3.0, 0.9135, 0.9405, 0.9282, 0.9560}}) {
    const auto row = compare_at(t1, t2, e.p);
    for (auto [got, want] : {std::pair{row.interval_1.x_lo, e.lo1},
                             std::pair{row.interval_1.x_hi, e.hi1},
                             std::pair{row.interval_2.x_lo, e.lo2},
                             std::pair{row.interval_2.x_hi, e.hi2}}) {
      worst = std::max(worst, std::abs(got - want));
      chk.require(std::abs(got - want) <= kTol,
                  fmt::format("p={:.4f}: {} vs {}", e.p, got, want));
    }
  }
  const auto report = sweep(t1, t2, 61);
  chk.require(report.verdict == Verdict::kIndistinguishable, "verdict");
  int status = 0;
  const auto text = run_cli({"compare", "--k1", "0.9135", "--k2", "0.9282", "--c",
                             "0.03", "--a", "2.5", "--p", "1"},
                            status);
  chk.require(status == 0 && text.find("verdict: INDISTINGUISHABLE") != std::string::npos,
              "cli verdict: " + text);
  if (o.pass) o.detail = fmt::format("max endpoint error {:.2e}", worst);
  return o;
}

// 4. Closed-form endpoints against a brute-force lattice.
Outcome lattice_tightness() {
  Outcome o;
  Check chk{o};
  constexpr double kStep = 1e-2;
  constexpr double kTol = 2e-2;
  std::mt19937_64 rng(20240401);
  std::uniform_real_distribution<double> uc(0.005, 0.1);
  double worst = 0;
  for (int pair = 0; pair < 50; ++pair) {
    const double c = uc(rng);
    const double k = std::uniform_real_distribution<double>(std::max(0.5, c + 1e-3), 1.0)(rng);
    const auto obs = EvalObservation::create(k, c);
    const double p_lo = parameter_bounds(obs).p.lo;
    for (int s = 0; s < 5; ++s) {
      const double p = std::min(1.0, p_lo + (1.0 - p_lo) * s / 4.0);
      const auto iv = real_performance_interval(obs, p);
      const auto ext = oracle::real_extent_at_p(k, c, p, kStep);
      if (!ext.found()) {
        chk.require(false, fmt::format("no lattice point at K={} C={} p={}", k, c, p));
        continue;
      }
      const double err = std::max(std::abs(ext.lo - iv.x_lo), std::abs(ext.hi - iv.x_hi));
      worst = std::max(worst, err);
      chk.require(err <= kTol, fmt::format("K={} C={} p={} err={}", k, c, p, err));
    }
  }
  if (o.pass) o.detail = fmt::format("max error {:.2e}", worst);
  return o;
}

// 5. Monte Carlo closure.
Outcome simulation_closure() {
  Outcome o;
  Check chk{o};
  const auto s = validate_random_draws(1000, 100000, 7, threads());
  chk.require(s.trials == 1000, "draw count");
  chk.require(s.rate(s.k_within_4sigma) >= 0.99,
              fmt::format("K within 4 sigma {:.3f}", s.rate(s.k_within_4sigma)));
  chk.require(s.rate(s.x_within_4sigma) >= 0.99,
              fmt::format("x within 4 sigma {:.3f}", s.rate(s.x_within_4sigma)));
  chk.require(s.analytic_contained == s.trials,
              fmt::format("analytic containment {}/{}", s.analytic_contained, s.trials));
  if (o.pass) {
    o.detail = fmt::format("K {:.3f}, x {:.3f}, analytic {:.3f}",
                           s.rate(s.k_within_4sigma), s.rate(s.x_within_4sigma),
                           s.rate(s.analytic_contained));
  }
  return o;
}

// 6. Random behaviour makes observed and real accuracy coincide.
Outcome random_behaviour_cancellation() {
  Outcome o;
  Check chk{o};
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  std::mt19937_64 rng(99);
  auto uniform = [&](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  int accepted = 0;
  int skipped = 0;
  double worst_sigmas = 0;
  while (accepted < 100) {
    const double c = uniform(0.005, 0.05);
    const double k = uniform(0.85, 0.99);
    const auto obs = EvalObservation::create(k, c);
    const auto amb = AmbiguityProfile::create(uniform(2.0, 6.0));
    PerformanceInterval iv;
    try {
      iv = reasonable_performance_interval(obs, amb, amb.random_p());
    } catch (const Error&) {
      ++skipped;  // random p outside the feasible range for this (K, C)
      continue;
    }
    ++accepted;
    chk.require(std::abs(iv.x_lo - k) <= 4 * kEps,
                fmt::format("x_lo - K = {:.3e} at K={} C={} a={}", iv.x_lo - k, k,
                            c, amb.a()));

    const double u = amb.random_u();
    const double p = amb.random_p();
    SimulationConfig cfg;
    cfg.n_tokens = 100000;
    cfg.c_corpus = c;
    cfg.params = {(k - c * (1 - u) * p) / (1 - c), u, p};
    cfg.a = amb.a();
    cfg.seed = 1000 + static_cast<std::uint64_t>(accepted);
    cfg.trials = 1;
    const auto r = simulate(cfg).front();
    // K_emp - x_emp = (both wrong, same tag - corpus wrong, tagger ok) / n;
    // each cell has probability C/a here.
    const double q = c / amb.a();
    const double sigma = std::sqrt(2 * q / static_cast<double>(cfg.n_tokens));
    const double dev = std::abs(r.k_observed_emp - r.x_true_emp);
    worst_sigmas = std::max(worst_sigmas, dev / sigma);
    chk.require(dev < 4 * sigma, fmt::format("|K_emp - x_emp| = {:.2e} vs 4 sigma {:.2e}",
                                             dev, 4 * sigma));
  }
  if (o.pass) {
    o.detail = fmt::format("100 triples ({} infeasible redrawn), worst {:.2f} sigma",
                           skipped, worst_sigmas);
  }
  return o;
}

// 7. Corpus pipeline.
Outcome corpus_pipeline() {
  Outcome o;
  Check chk{o};
  const std::string dir = NOISYEVAL_FIXTURE_DIR;
  const auto lex = read_lexicon_file(dir + "/lexicon.tsv");
  const auto r = score(read_corpus_file(dir + "/reference.txt"),
                       read_corpus_file(dir + "/system.txt"), lex);
  chk.require(r.n_total == 10, fmt::format("n_total {}", r.n_total));
  chk.require(r.k_ambiguous == 0.75, fmt::format("k_ambiguous {}", r.k_ambiguous));
  chk.require(r.k_overall == 0.8, fmt::format("k_overall {}", r.k_overall));
  chk.require(r.a_measured == 2.5, fmt::format("a_measured {}", r.a_measured));

  TaggedCorpus synthetic;
  const char* words[] = {"chief", "executive", "requested", "married", "the"};
  const char* tags[] = {"NN", "JJ", "VBN", "JJ", "DT"};
  for (int i = 0; i < 10000; ++i) synthetic.tokens.push_back({words[i % 5], tags[i % 5]});
  const auto injected =
      inject_noise(synthetic, lex, {.c_target = 0.1, .mode = NoiseMode::kRandom}, 11);
  const double sigma = binomial_sigma(0.1, injected.eligible);
  const double dev = std::abs(injected.realized_rate() - 0.1);
  chk.require(dev <= 3 * sigma, fmt::format("realized {} vs 0.1 (3 sigma {:.4f})",
                                            injected.realized_rate(), 3 * sigma));
  if (o.pass) {
    o.detail = fmt::format("injected rate {:.4f} over {} ambiguous tokens",
                           injected.realized_rate(), injected.eligible);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"worked interval example", worked_example},
      {"t bounds", t_bounds},
      {"two-tagger reference comparison", reference_comparison},
      {"lattice oracle tightness", lattice_tightness},
      {"simulation closure", simulation_closure},
      {"random-behaviour cancellation", random_behaviour_cancellation},
      {"corpus pipeline", corpus_pipeline},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    fmt::print("{} {}. {} ({:.2f}s){}{}\n", o.pass ? "PASS" : "FAIL", i + 1,
               criteria[i].first, secs, o.detail.empty() ? "" : ": ", o.detail);
  }
  fmt::print("{}/{} criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
