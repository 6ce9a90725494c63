#pragma once

#include <ostream>
#include <string>

#include "noisyeval/interval_core.hpp"
#include "noisyeval/tagger_compare.hpp"

namespace noisyeval {

/// 0.9075 -> "90.75%".
std::string format_percent(double fraction);

/// "x ∈ [90.00%, 96.00%]".
std::string format_interval_text(const Range& x);

/// Header p,x1_lo,x1_hi,x2_lo,x2_hi,overlap_lo,overlap_hi,jaccard followed by
/// one row per grid point at full precision. Disjoint rows leave both
/// overlap fields empty. Throws Error(kEmptyReport) for a report without
/// rows and Error(kIo) if the stream fails.
void emit_sweep_csv(const ComparisonReport& report, std::ostream& out);

}  // namespace noisyeval
