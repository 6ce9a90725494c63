#include "noisyeval/error.hpp"

namespace noisyeval {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDomain: return "DOMAIN";
    case ErrorCode::kAssumptionKGreaterC: return "ASSUMPTION_K_GT_C";
    case ErrorCode::kInfeasibleP: return "INFEASIBLE_P";
    case ErrorCode::kEmptyInterval: return "EMPTY_INTERVAL";
    case ErrorCode::kEmptyReport: return "EMPTY_REPORT";
    case ErrorCode::kMalformedToken: return "MALFORMED_TOKEN";
    case ErrorCode::kMalformedLexicon: return "MALFORMED_LEXICON";
    case ErrorCode::kAlignment: return "ALIGNMENT";
    case ErrorCode::kNoAmbiguousTokens: return "NO_AMBIGUOUS_TOKENS";
    case ErrorCode::kSystematicUnreachable: return "SYSTEMATIC_UNREACHABLE";
    case ErrorCode::kConfig: return "CONFIG";
    case ErrorCode::kIo: return "IO";
    case ErrorCode::kUsage: return "USAGE";
  }
  return "UNKNOWN";
}

bool is_domain_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDomain:
    case ErrorCode::kAssumptionKGreaterC:
    case ErrorCode::kInfeasibleP:
    case ErrorCode::kEmptyInterval:
    case ErrorCode::kEmptyReport:
    case ErrorCode::kNoAmbiguousTokens:
    case ErrorCode::kSystematicUnreachable:
      return true;
    default:
      return false;
  }
}

}  // namespace noisyeval
