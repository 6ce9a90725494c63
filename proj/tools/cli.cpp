#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "noisyeval/corpus_io.hpp"
#include "noisyeval/error.hpp"
#include "noisyeval/interval_core.hpp"
#include "noisyeval/noise_sim.hpp"
#include "noisyeval/report.hpp"
#include "noisyeval/tagger_compare.hpp"

namespace noisyeval::cli {
namespace {

using nlohmann::json;

enum class Format { kText, kJson, kCsv };

struct Common {
  std::string format = "text";

  Format parsed() const {
    if (format == "json") return Format::kJson;
    if (format == "csv") return Format::kCsv;
    return Format::kText;
  }
};

std::string regime_name(Regime r) {
  return r == Regime::kGeneral ? "general" : "reasonable";
}

json range_json(const Range& r) { return {{"lo", r.lo}, {"hi", r.hi}}; }

json interval_json(const PerformanceInterval& iv) {
  return {{"p", iv.p_used},
          {"x_lo", iv.x_lo},
          {"x_hi", iv.x_hi},
          {"regime", regime_name(iv.regime)}};
}

std::string range_text(const Range& r) {
  return fmt::format("[{}, {}]", format_percent(r.lo), format_percent(r.hi));
}

double parse_real(std::string_view text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kUsage, fmt::format("'{}' is not a number", text));
  }
  return v;
}

// "random" resolves to 1/(a-1) once a is known.
double resolve_p(const std::string& text, const AmbiguityProfile* amb) {
  if (text == "random") {
    if (!amb) throw Error(ErrorCode::kUsage, "--p random needs --a");
    return amb->random_p();
  }
  return parse_rate(text);
}

std::uint64_t resolve_seed(const std::string& flag,
                           const std::optional<std::string>& env_seed) {
  const std::string& text = !flag.empty() ? flag : env_seed.value_or("1");
  std::uint64_t seed = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kUsage, fmt::format("invalid seed '{}'", text));
  }
  return seed;
}

unsigned default_threads() {
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  std::string k, c;
};

void run_bounds(const BoundsArgs& a, Format fmt_, std::ostream& out) {
  const auto obs = EvalObservation::create(parse_rate(a.k), parse_rate(a.c));
  const ParameterBounds b = parameter_bounds(obs);
  switch (fmt_) {
    case Format::kText:
      out << "t ∈ " << range_text(b.t) << '\n'
          << "u ∈ " << range_text(b.u) << '\n'
          << "p ∈ " << range_text(b.p) << '\n';
      break;
    case Format::kJson:
      out << json{{"command", "bounds"},
                  {"k", obs.k()},
                  {"c", obs.c()},
                  {"t", range_json(b.t)},
                  {"u", range_json(b.u)},
                  {"p", range_json(b.p)}}
                 .dump()
          << '\n';
      break;
    case Format::kCsv:
      out << "parameter,lo,hi\n"
          << fmt::format("t,{},{}\nu,{},{}\np,{},{}\n", b.t.lo, b.t.hi,
                         b.u.lo, b.u.hi, b.p.lo, b.p.hi);
      break;
  }
}

// -------------------------------------------------------------- interval

struct IntervalArgs {
  std::string k, c, p;
};

void emit_intervals(const std::string& command, const EvalObservation& obs,
                    const std::vector<PerformanceInterval>& rows,
                    const std::vector<Range>& u_ranges, bool single,
                    Format fmt_, std::ostream& out) {
  switch (fmt_) {
    case Format::kText:
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string prefix =
            single ? "" : fmt::format("p={}: ", rows[i].p_used);
        if (!u_ranges.empty()) {
          out << prefix << "u ∈ " << range_text(u_ranges[i]) << '\n';
        }
        out << prefix << format_interval_text(rows[i].range()) << '\n';
      }
      break;
    case Format::kJson: {
      json j{{"command", command}, {"k", obs.k()}, {"c", obs.c()}};
      json arr = json::array();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        json row = interval_json(rows[i]);
        if (!u_ranges.empty()) row["u"] = range_json(u_ranges[i]);
        arr.push_back(std::move(row));
      }
      j["rows"] = std::move(arr);
      out << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      out << (u_ranges.empty() ? "p,x_lo,x_hi\n" : "p,u_lo,u_hi,x_lo,x_hi\n");
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (u_ranges.empty()) {
          out << fmt::format("{},{},{}\n", rows[i].p_used, rows[i].x_lo,
                             rows[i].x_hi);
        } else {
          out << fmt::format("{},{},{},{},{}\n", rows[i].p_used,
                             u_ranges[i].lo, u_ranges[i].hi, rows[i].x_lo,
                             rows[i].x_hi);
        }
      }
      break;
  }
}

void run_interval(const IntervalArgs& a, Format fmt_, std::ostream& out) {
  const auto obs = EvalObservation::create(parse_rate(a.k), parse_rate(a.c));
  std::vector<double> ps;
  if (!a.p.empty()) {
    ps.push_back(parse_rate(a.p));
  } else {
    ps = {parameter_bounds(obs).p.lo, 1.0};
  }
  std::vector<PerformanceInterval> rows;
  for (double p : ps) rows.push_back(real_performance_interval(obs, p));
  emit_intervals("interval", obs, rows, {}, !a.p.empty(), fmt_, out);
}

// ------------------------------------------------------------ reasonable

struct ReasonableArgs {
  std::string k, c, a, p;
  bool relaxed_p = false;
};

void run_reasonable(const ReasonableArgs& a, Format fmt_, std::ostream& out) {
  const auto obs = EvalObservation::create(parse_rate(a.k), parse_rate(a.c));
  const auto amb = AmbiguityProfile::create(parse_real(a.a));
  const PFloor floor = a.relaxed_p ? PFloor::kFeasible : PFloor::kRandom;
  std::vector<double> ps;
  if (!a.p.empty()) {
    ps.push_back(resolve_p(a.p, &amb));
  } else {
    const auto range = reasonable_p_range(obs, amb, floor);
    if (!range) {
      throw Error(ErrorCode::kInfeasibleP,
                  fmt::format("no reasonable p exists for K = {}, C = {}, "
                              "a = {}",
                              obs.k(), obs.c(), amb.a()));
    }
    ps = {range->lo, 1.0};
  }
  std::vector<PerformanceInterval> rows;
  std::vector<Range> u_ranges;
  for (double p : ps) {
    u_ranges.push_back(reasonable_parameter_bounds(obs, amb, p, floor).u);
    rows.push_back(reasonable_performance_interval(obs, amb, p, floor));
  }
  emit_intervals("reasonable", obs, rows, u_ranges, !a.p.empty(), fmt_, out);
}

// ------------------------------------------------------- compare / sweep

struct PairArgs {
  std::string k1, k2, c, c1, c2, a, a2, p;
  std::string label1 = "T1";
  std::string label2 = "T2";
  bool relaxed_p = false;
  int steps = 61;
  bool start_at_inverse_a = false;
};

std::pair<TaggerEvalCase, TaggerEvalCase> build_cases(const PairArgs& a) {
  auto pick_c = [&](const std::string& specific) {
    if (!specific.empty()) return parse_rate(specific);
    if (!a.c.empty()) return parse_rate(a.c);
    throw Error(ErrorCode::kUsage, "corpus error rate needs --c or --c1/--c2");
  };
  const auto amb1 = AmbiguityProfile::create(parse_real(a.a));
  const auto amb2 =
      a.a2.empty() ? amb1 : AmbiguityProfile::create(parse_real(a.a2));
  TaggerEvalCase c1{a.label1,
                    EvalObservation::create(parse_rate(a.k1), pick_c(a.c1)),
                    amb1};
  TaggerEvalCase c2{a.label2,
                    EvalObservation::create(parse_rate(a.k2), pick_c(a.c2)),
                    amb2};
  return {std::move(c1), std::move(c2)};
}

json row_json(const ComparisonRow& row) {
  json j{{"p", row.p},
         {"interval_1", interval_json(row.interval_1)},
         {"interval_2", interval_json(row.interval_2)},
         {"jaccard", row.overlap_jaccard}};
  j["overlap"] = row.overlap ? range_json(*row.overlap) : json(nullptr);
  return j;
}

void run_compare(const PairArgs& a, Format fmt_, std::ostream& out) {
  const auto [case1, case2] = build_cases(a);
  const PFloor floor = a.relaxed_p ? PFloor::kFeasible : PFloor::kRandom;
  const double p = a.p == "random" ? std::max(case1.amb.random_p(),
                                              case2.amb.random_p())
                                   : parse_rate(a.p);
  const ComparisonRow row = compare_at(case1, case2, p, floor);
  const Verdict v = row.overlap ? Verdict::kIndistinguishable
                                : Verdict::kDistinguishable;
  switch (fmt_) {
    case Format::kText:
      out << case1.label << ": " << format_interval_text(row.interval_1.range())
          << '\n'
          << case2.label << ": " << format_interval_text(row.interval_2.range())
          << '\n';
      if (row.overlap) {
        out << "overlap: " << range_text(*row.overlap)
            << fmt::format(" (jaccard {:.4f})", row.overlap_jaccard) << '\n';
      } else {
        out << "overlap: none\n";
      }
      out << "verdict: " << verdict_name(v) << '\n';
      break;
    case Format::kJson: {
      json j = row_json(row);
      j["command"] = "compare";
      j["labels"] = {case1.label, case2.label};
      j["verdict"] = verdict_name(v);
      out << j.dump() << '\n';
      break;
    }
    case Format::kCsv: {
      ComparisonReport report;
      report.rows.push_back(row);
      emit_sweep_csv(report, out);
      break;
    }
  }
}

void run_sweep(const PairArgs& a, Format fmt_, std::ostream& out) {
  const auto [case1, case2] = build_cases(a);
  const ComparisonReport report =
      sweep(case1, case2, a.steps, SweepOptions{.start_at_inverse_a = a.start_at_inverse_a});
  switch (fmt_) {
    case Format::kText:
      out << fmt::format("{:<8} {:<20} {:<20} {:<20} {}\n", "p", report.label_1,
                         report.label_2, "overlap", "jaccard");
      for (const auto& row : report.rows) {
        out << fmt::format("{:<8.4f} {:<20} {:<20} {:<20} {:.4f}\n", row.p,
                           range_text(row.interval_1.range()),
                           range_text(row.interval_2.range()),
                           row.overlap ? range_text(*row.overlap) : "none",
                           row.overlap_jaccard);
      }
      out << "verdict: " << verdict_name(report.verdict) << '\n';
      break;
    case Format::kJson: {
      json rows = json::array();
      for (const auto& row : report.rows) rows.push_back(row_json(row));
      out << json{{"command", "sweep"},
                  {"labels", {report.label_1, report.label_2}},
                  {"p_grid", report.p_grid},
                  {"rows", std::move(rows)},
                  {"verdict", verdict_name(report.verdict)}}
                 .dump()
          << '\n';
      break;
    }
    case Format::kCsv:
      emit_sweep_csv(report, out);
      break;
  }
}

// ----------------------------------------------------------------- score

struct ScoreArgs {
  std::string reference, system, lexicon, c;
  bool type_weighted = false;
};

void run_score(const ScoreArgs& a, Format fmt_, std::ostream& out) {
  const double c = parse_rate(a.c);
  const TaggedCorpus ref = read_corpus_file(a.reference);
  const TaggedCorpus sys = read_corpus_file(a.system);
  const AmbiguityLexicon lex = read_lexicon_file(a.lexicon);
  const ScoreReport r =
      score(ref, sys, lex,
            a.type_weighted ? AmbiguityWeighting::kType
                            : AmbiguityWeighting::kToken);
  const EvalObservation obs = build_observation(r, c);
  const ParameterBounds b = parameter_bounds(obs);
  const PerformanceInterval general_lo_p = real_performance_interval(obs, b.p.lo);
  const PerformanceInterval general_p1 = real_performance_interval(obs, 1.0);

  std::optional<PerformanceInterval> reasonable;
  std::string reasonable_note;
  try {
    const auto amb = AmbiguityProfile::create(r.a_measured);
    const auto range = reasonable_p_range(obs, amb);
    if (!range) {
      throw Error(ErrorCode::kInfeasibleP, "no reasonable p for measured a");
    }
    reasonable = reasonable_performance_interval(obs, amb, range->lo);
  } catch (const Error& e) {
    reasonable_note = error_code_name(e.code());
  }

  switch (fmt_) {
    case Format::kText:
      out << fmt::format("tokens: {} (ambiguous: {})\n", r.n_total,
                         r.n_ambiguous)
          << "k_ambiguous: " << format_percent(r.k_ambiguous) << '\n'
          << "k_overall: " << format_percent(r.k_overall) << '\n'
          << fmt::format("a_measured: {:.4f}\n", r.a_measured)
          << fmt::format("general p={}: ", general_lo_p.p_used)
          << format_interval_text(general_lo_p.range()) << '\n'
          << "general p=1: " << format_interval_text(general_p1.range())
          << '\n';
      if (reasonable) {
        out << fmt::format("reasonable p={}: ", reasonable->p_used)
            << format_interval_text(reasonable->range()) << '\n';
      } else {
        out << "reasonable: unavailable (" << reasonable_note << ")\n";
      }
      break;
    case Format::kJson: {
      json j{{"command", "score"},
             {"n_total", r.n_total},
             {"n_ambiguous", r.n_ambiguous},
             {"k_ambiguous", r.k_ambiguous},
             {"k_overall", r.k_overall},
             {"a_measured", r.a_measured},
             {"c", c},
             {"general", {interval_json(general_lo_p), interval_json(general_p1)}}};
      j["reasonable"] = reasonable ? interval_json(*reasonable) : json(nullptr);
      out << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      out << "n_total,n_ambiguous,k_ambiguous,k_overall,a_measured,c\n"
          << fmt::format("{},{},{},{},{},{}\n", r.n_total, r.n_ambiguous,
                         r.k_ambiguous, r.k_overall, r.a_measured, c);
      break;
  }
}

// ------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string config_file;
  std::optional<std::uint64_t> n, trials;
  std::string c, t, u, p, a, seed;
  unsigned threads = 0;
};

void run_simulate(const SimulateArgs& a, Format fmt_, std::ostream& out,
                  const std::optional<std::string>& env_seed) {
  SimulationConfig cfg;
  cfg.seed = resolve_seed("", env_seed);
  if (!a.config_file.empty()) {
    std::ifstream in(a.config_file);
    if (!in) {
      throw Error(ErrorCode::kIo,
                  fmt::format("cannot open config '{}'", a.config_file));
    }
    cfg = parse_simulation_config(in, cfg);
  }
  if (a.n) cfg.n_tokens = *a.n;
  if (a.trials) cfg.trials = *a.trials;
  if (!a.c.empty()) cfg.c_corpus = parse_rate(a.c);
  if (!a.a.empty()) cfg.a = parse_real(a.a);
  if (!a.t.empty()) cfg.params.t = parse_rate(a.t);
  if (!a.u.empty()) {
    cfg.params.u = a.u == "random" ? 1.0 / cfg.a : parse_rate(a.u);
  }
  if (!a.p.empty()) {
    cfg.params.p = a.p == "random" ? 1.0 / (cfg.a - 1.0) : parse_rate(a.p);
  }
  if (!a.seed.empty()) cfg.seed = resolve_seed(a.seed, env_seed);

  const auto results =
      simulate(cfg, a.threads ? a.threads : default_threads());
  const double k = observed_from_params(cfg.c_corpus, cfg.params);
  const double x = real_from_params(cfg.c_corpus, cfg.params);
  if (fmt_ == Format::kCsv) {
    out << "trial,ok_ok,ok_bad,bad_ok,bad_bad_same,bad_bad_diff,"
           "k_observed_emp,x_true_emp\n";
    for (const auto& r : results) {
      out << fmt::format("{},{},{},{},{},{},{},{}\n", r.trial, r.counts.ok_ok,
                         r.counts.ok_bad, r.counts.bad_ok,
                         r.counts.bad_bad_same, r.counts.bad_bad_diff,
                         r.k_observed_emp, r.x_true_emp);
    }
    return;
  }
  for (const auto& r : results) {
    out << json{{"trial", r.trial},
                {"n", cfg.n_tokens},
                {"seed", cfg.seed},
                {"counts",
                 {{"ok_ok", r.counts.ok_ok},
                  {"ok_bad", r.counts.ok_bad},
                  {"bad_ok", r.counts.bad_ok},
                  {"bad_bad_same", r.counts.bad_bad_same},
                  {"bad_bad_diff", r.counts.bad_bad_diff}}},
                {"k_observed_emp", r.k_observed_emp},
                {"x_true_emp", r.x_true_emp},
                {"k_analytic", k},
                {"x_analytic", x}}
               .dump()
        << '\n';
  }
}

// ------------------------------------------------------------- validate

struct ValidateArgs {
  std::uint64_t draws = 1000;
  std::uint64_t n = 100000;
  std::string seed;
  unsigned threads = 0;
};

void run_validate(const ValidateArgs& a, Format fmt_, std::ostream& out,
                  const std::optional<std::string>& env_seed) {
  const std::uint64_t seed = resolve_seed(a.seed, env_seed);
  const ValidationSummary s = validate_random_draws(
      a.draws, a.n, seed, a.threads ? a.threads : default_threads());
  const bool pass = s.analytic_contained == s.trials &&
                    s.rate(s.k_within_4sigma) >= 0.99 &&
                    s.rate(s.x_within_4sigma) >= 0.99;
  switch (fmt_) {
    case Format::kText:
      out << fmt::format("draws: {} (n = {}, seed = {})\n", s.trials, a.n, seed)
          << "analytic containment: " << format_percent(s.rate(s.analytic_contained)) << '\n'
          << "empirical containment (4 sigma): "
          << format_percent(s.rate(s.empirical_contained)) << '\n'
          << "K within 4 sigma: " << format_percent(s.rate(s.k_within_4sigma)) << '\n'
          << "x within 4 sigma: " << format_percent(s.rate(s.x_within_4sigma)) << '\n'
          << "status: " << (pass ? "PASS" : "FAIL") << '\n';
      break;
    case Format::kJson:
      out << json{{"command", "validate"},
                  {"draws", s.trials},
                  {"n", a.n},
                  {"seed", seed},
                  {"analytic_containment", s.rate(s.analytic_contained)},
                  {"empirical_containment", s.rate(s.empirical_contained)},
                  {"k_within_4sigma", s.rate(s.k_within_4sigma)},
                  {"x_within_4sigma", s.rate(s.x_within_4sigma)},
                  {"pass", pass}}
                 .dump()
          << '\n';
      break;
    case Format::kCsv:
      out << "draws,n,seed,analytic_containment,empirical_containment,"
             "k_within_4sigma,x_within_4sigma,pass\n"
          << fmt::format("{},{},{},{},{},{},{},{}\n", s.trials, a.n, seed,
                         s.rate(s.analytic_contained),
                         s.rate(s.empirical_contained),
                         s.rate(s.k_within_4sigma), s.rate(s.x_within_4sigma),
                         pass);
      break;
  }
}

}  // namespace

double parse_rate(std::string_view text) {
  std::string_view body = text;
  bool percent = false;
  if (!body.empty() && body.back() == '%') {
    percent = true;
    body.remove_suffix(1);
  }
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (body.empty() || ec != std::errc() || ptr != body.data() + body.size()) {
    throw Error(ErrorCode::kUsage,
                fmt::format("'{}' is not a fraction or a percentage", text));
  }
  return percent ? v / 100.0 : v;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::optional<std::string> env_seed) {
  CLI::App app{"Accuracy bounds for taggers scored against noisy corpora",
               "noisyeval"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  std::function<void()> action;

  BoundsArgs bounds;
  auto* sc_bounds = app.add_subcommand("bounds", "Feasible ranges of t, u, p");
  sc_bounds->add_option("--k", bounds.k, "Observed accuracy K")->required();
  sc_bounds->add_option("--c", bounds.c, "Corpus error rate C")->required();
  sc_bounds->callback([&] { action = [&] { run_bounds(bounds, common.parsed(), out); }; });

  IntervalArgs interval;
  auto* sc_interval =
      app.add_subcommand("interval", "Real-accuracy interval over all feasible parameters");
  sc_interval->add_option("--k", interval.k)->required();
  sc_interval->add_option("--c", interval.c)->required();
  sc_interval->add_option("--p", interval.p,
                          "Same-error probability (default: both ends of its range)");
  sc_interval->callback(
      [&] { action = [&] { run_interval(interval, common.parsed(), out); }; });

  ReasonableArgs reasonable;
  auto* sc_reasonable =
      app.add_subcommand("reasonable", "Real-accuracy interval under random-behaviour bounds");
  sc_reasonable->add_option("--k", reasonable.k)->required();
  sc_reasonable->add_option("--c", reasonable.c)->required();
  sc_reasonable->add_option("--a", reasonable.a, "Average ambiguity ratio")->required();
  sc_reasonable->add_option("--p", reasonable.p, "Fraction, percent or 'random' (1/(a-1))");
  sc_reasonable->add_flag("--relaxed-p", reasonable.relaxed_p,
                          "Allow p below 1/(a-1)");
  sc_reasonable->callback(
      [&] { action = [&] { run_reasonable(reasonable, common.parsed(), out); }; });

  PairArgs pair;
  auto add_pair_options = [&](CLI::App* sc) {
    sc->add_option("--k1", pair.k1)->required();
    sc->add_option("--k2", pair.k2)->required();
    sc->add_option("--c", pair.c, "Corpus error rate for both taggers");
    sc->add_option("--c1", pair.c1);
    sc->add_option("--c2", pair.c2);
    sc->add_option("--a", pair.a, "Ambiguity ratio (both, or tagger 1)")->required();
    sc->add_option("--a2", pair.a2, "Ambiguity ratio of tagger 2");
    sc->add_option("--label1", pair.label1);
    sc->add_option("--label2", pair.label2);
  };
  auto* sc_compare = app.add_subcommand("compare", "Compare two taggers at one p");
  add_pair_options(sc_compare);
  sc_compare->add_option("--p", pair.p, "Fraction, percent or 'random'")->required();
  sc_compare->add_flag("--relaxed-p", pair.relaxed_p);
  sc_compare->callback([&] { action = [&] { run_compare(pair, common.parsed(), out); }; });

  auto* sc_sweep = app.add_subcommand("sweep", "Compare two taggers over a grid of p");
  add_pair_options(sc_sweep);
  sc_sweep->add_option("--steps", pair.steps, "Grid points")->required();
  sc_sweep->add_flag("--start-inverse-a", pair.start_at_inverse_a,
                     "Start the grid at 1/a");
  sc_sweep->callback([&] { action = [&] { run_sweep(pair, common.parsed(), out); }; });

  ScoreArgs score_args;
  auto* sc_score = app.add_subcommand("score", "Score a system corpus against a reference");
  sc_score->add_option("--reference", score_args.reference)->required();
  sc_score->add_option("--system", score_args.system)->required();
  sc_score->add_option("--lexicon", score_args.lexicon)->required();
  sc_score->add_option("--c", score_args.c, "Corpus error rate")->required();
  sc_score->add_flag("--type-weighted", score_args.type_weighted,
                     "Average ambiguity over word types instead of tokens");
  sc_score->callback([&] { action = [&] { run_score(score_args, common.parsed(), out); }; });

  SimulateArgs sim;
  auto* sc_sim = app.add_subcommand("simulate", "Monte Carlo evaluation trials");
  sc_sim->add_option("--config", sim.config_file, "key=value config file");
  sc_sim->add_option("--n", sim.n, "Tokens per trial");
  sc_sim->add_option("--c", sim.c);
  sc_sim->add_option("--t", sim.t);
  sc_sim->add_option("--u", sim.u, "Fraction, percent or 'random' (1/a)");
  sc_sim->add_option("--p", sim.p, "Fraction, percent or 'random' (1/(a-1))");
  sc_sim->add_option("--a", sim.a);
  sc_sim->add_option("--seed", sim.seed, "Default: $NOISYEVAL_SEED or 1");
  sc_sim->add_option("--trials", sim.trials);
  sc_sim->add_option("--threads", sim.threads, "0 = hardware concurrency");
  sc_sim->callback([&] {
    action = [&] { run_simulate(sim, common.parsed(), out, env_seed); };
  });

  ValidateArgs val;
  auto* sc_val = app.add_subcommand("validate", "Check the closed forms against simulation");
  sc_val->add_option("--draws", val.draws);
  sc_val->add_option("--n", val.n);
  sc_val->add_option("--seed", val.seed, "Default: $NOISYEVAL_SEED or 1");
  sc_val->add_option("--threads", val.threads, "0 = hardware concurrency");
  sc_val->callback([&] {
    action = [&] { run_validate(val, common.parsed(), out, env_seed); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << error_code_name(ErrorCode::kUsage) << ": " << e.what()
        << '\n';
    return kExitIo;
  }

  try {
    action();
    out.flush();
    if (!out) throw Error(ErrorCode::kIo, "failed writing output");
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
    return is_domain_error(e.code()) ? kExitDomain : kExitIo;
  }
}

}  // namespace noisyeval::cli
