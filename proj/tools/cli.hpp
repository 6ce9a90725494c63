#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace noisyeval::cli {

/// Exit statuses of `noisyeval`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // infeasible p, K <= C, ...
inline constexpr int kExitIo = 2;      // unreadable files, bad flags/format

/// Parses "0.93" or "93%" into a fraction. Throws Error(kUsage).
double parse_rate(std::string_view text);

/// Runs one invocation. `args` excludes the program name. `env_seed` is the
/// value of NOISYEVAL_SEED, if set.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::optional<std::string> env_seed = std::nullopt);

}  // namespace noisyeval::cli
