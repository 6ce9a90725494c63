#include "noisyeval/tagger_compare.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "noisyeval/error.hpp"

namespace noisyeval {

void TaggerEvalCase::validate() const {
  if (label.empty()) {
    throw Error(ErrorCode::kDomain, "tagger label must be non-empty");
  }
}

Overlap measure_overlap(const Range& a, const Range& b) {
  const double lo = std::max(a.lo, b.lo);
  const double hi = std::min(a.hi, b.hi);
  if (lo > hi) return {};
  const double union_width = std::max(a.hi, b.hi) - std::min(a.lo, b.lo);
  Overlap out;
  out.intersection = Range{lo, hi};
  out.jaccard = union_width > 0.0 ? (hi - lo) / union_width : 1.0;
  return out;
}

ComparisonRow compare_at(const TaggerEvalCase& case1,
                         const TaggerEvalCase& case2, double p,
                         PFloor floor) {
  case1.validate();
  case2.validate();
  ComparisonRow row;
  row.p = p;
  row.interval_1 =
      reasonable_performance_interval(case1.obs, case1.amb, p, floor);
  row.interval_2 =
      reasonable_performance_interval(case2.obs, case2.amb, p, floor);
  const Overlap ov =
      measure_overlap(row.interval_1.range(), row.interval_2.range());
  row.overlap = ov.intersection;
  row.overlap_jaccard = ov.jaccard;
  return row;
}

ComparisonReport sweep(const TaggerEvalCase& case1,
                       const TaggerEvalCase& case2, int p_steps,
                       const SweepOptions& options) {
  if (p_steps < 2) {
    throw Error(ErrorCode::kDomain,
                fmt::format("sweep needs at least 2 steps, got {}", p_steps));
  }
  const PFloor floor =
      options.start_at_inverse_a ? PFloor::kFeasible : PFloor::kRandom;
  const auto r1 = reasonable_p_range(case1.obs, case1.amb, floor);
  const auto r2 = reasonable_p_range(case2.obs, case2.amb, floor);
  if (!r1 || !r2) {
    throw Error(ErrorCode::kEmptyReport,
                fmt::format("no reasonable p exists for tagger {}",
                            !r1 ? case1.label : case2.label));
  }
  double start = std::max(r1->lo, r2->lo);
  if (options.start_at_inverse_a) {
    start = std::max({start, case1.amb.random_u(), case2.amb.random_u()});
  }

  ComparisonReport report;
  report.label_1 = case1.label;
  report.label_2 = case2.label;
  report.p_grid.reserve(static_cast<std::size_t>(p_steps));
  for (int i = 0; i < p_steps; ++i) {
    const double frac = static_cast<double>(i) / (p_steps - 1);
    // Pin the last point to exactly 1.
    report.p_grid.push_back(i + 1 == p_steps ? 1.0
                                             : start + (1.0 - start) * frac);
  }
  report.rows.reserve(report.p_grid.size());
  for (double p : report.p_grid) {
    report.rows.push_back(compare_at(case1, case2, p, floor));
  }
  report.verdict = verdict(report);
  return report;
}

Verdict verdict(const ComparisonReport& report) {
  const bool all_disjoint =
      std::all_of(report.rows.begin(), report.rows.end(),
                  [](const ComparisonRow& r) { return !r.overlap; });
  return (all_disjoint && !report.rows.empty()) ? Verdict::kDistinguishable
                                                : Verdict::kIndistinguishable;
}

const char* verdict_name(Verdict v) noexcept {
  return v == Verdict::kDistinguishable ? "DISTINGUISHABLE"
                                        : "INDISTINGUISHABLE";
}

}  // namespace noisyeval
