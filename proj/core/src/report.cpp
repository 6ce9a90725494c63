#include "noisyeval/report.hpp"

#include <fmt/format.h>

#include "noisyeval/error.hpp"

namespace noisyeval {

std::string format_percent(double fraction) {
  return fmt::format("{:.2f}%", fraction * 100.0);
}

std::string format_interval_text(const Range& x) {
  return fmt::format("x ∈ [{}, {}]", format_percent(x.lo),
                     format_percent(x.hi));
}

void emit_sweep_csv(const ComparisonReport& report, std::ostream& out) {
  if (report.rows.empty()) {
    throw Error(ErrorCode::kEmptyReport, "sweep report has no rows");
  }
  out << "p,x1_lo,x1_hi,x2_lo,x2_hi,overlap_lo,overlap_hi,jaccard\n";
  for (const auto& row : report.rows) {
    out << fmt::format("{},{},{},{},{},", row.p, row.interval_1.x_lo,
                       row.interval_1.x_hi, row.interval_2.x_lo,
                       row.interval_2.x_hi);
    if (row.overlap) {
      out << fmt::format("{},{}", row.overlap->lo, row.overlap->hi);
    } else {
      out << ',';
    }
    out << fmt::format(",{}\n", row.overlap_jaccard);
  }
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "failed writing sweep CSV");
}

}  // namespace noisyeval
