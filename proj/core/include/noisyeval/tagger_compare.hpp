#pragma once

// Conservative pairwise comparison of two taggers: each tagger gets a
// reasonable real-accuracy interval per p, and the pair is only called
// distinguishable when the intervals never overlap.

#include <optional>
#include <string>
#include <vector>

#include "noisyeval/interval_core.hpp"

namespace noisyeval {

struct TaggerEvalCase {
  std::string label;
  EvalObservation obs;
  AmbiguityProfile amb;

  /// Throws Error(kDomain) on an empty label.
  void validate() const;
};

enum class Verdict { kDistinguishable, kIndistinguishable };

struct ComparisonRow {
  double p = 0.0;
  PerformanceInterval interval_1;
  PerformanceInterval interval_2;
  /// Intersection of the two x ranges; nullopt when disjoint.
  std::optional<Range> overlap;
  /// |intersection| / |union|, 0 when disjoint.
  double overlap_jaccard = 0.0;
};

struct ComparisonReport {
  std::string label_1;
  std::string label_2;
  std::vector<double> p_grid;
  std::vector<ComparisonRow> rows;
  Verdict verdict = Verdict::kIndistinguishable;
};

struct SweepOptions {
  /// Start the grid at max{1/a} (both cases) instead of the reasonable p
  /// floor; the intervals are then computed with PFloor::kFeasible.
  bool start_at_inverse_a = false;
};

/// Overlap and Jaccard index of two closed ranges. Two identical point
/// ranges have Jaccard 1.
struct Overlap {
  std::optional<Range> intersection;
  double jaccard = 0.0;
};
Overlap measure_overlap(const Range& a, const Range& b);

ComparisonRow compare_at(const TaggerEvalCase& case1,
                         const TaggerEvalCase& case2, double p,
                         PFloor floor = PFloor::kRandom);

/// Uniform grid of p_steps points from the common p floor to 1, both ends
/// included. Throws Error(kDomain) for p_steps < 2 and Error(kEmptyReport)
/// when the two cases share no admissible p.
ComparisonReport sweep(const TaggerEvalCase& case1,
                       const TaggerEvalCase& case2, int p_steps,
                       const SweepOptions& options = {});

/// Distinguishable iff every row is disjoint.
Verdict verdict(const ComparisonReport& report);

const char* verdict_name(Verdict v) noexcept;

}  // namespace noisyeval
