#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace noisyeval {

/// Machine-readable failure categories. The CLI prints the code name on the
/// first line of every error and maps domain codes to exit 1, the rest to 2.
enum class ErrorCode {
  kDomain,                 // an input fraction outside [0,1], a <= 1, ...
  kAssumptionKGreaterC,    // K <= C
  kInfeasibleP,            // p outside the admissible range for the regime
  kEmptyInterval,          // reasonable u-range is empty
  kEmptyReport,            // sweep has no common feasible p
  kMalformedToken,         // corpus token without an underscore
  kMalformedLexicon,       // bad lexicon line or duplicate surface
  kAlignment,              // reference/system token streams differ
  kNoAmbiguousTokens,      // k_ambiguous undefined
  kSystematicUnreachable,  // not enough rule-matched tokens
  kConfig,                 // bad simulation config file
  kIo,
  kUsage,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// True for errors that stem from the numbers themselves rather than from
/// files or command-line syntax.
bool is_domain_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace noisyeval
