#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coarse_menger {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // a verification came back negative or inconclusive
inline constexpr int kExitUsage = 2;     // bad flags or unreadable input
inline constexpr int kExitInternal = 3;  // internal invariant violated

/// Runs one subcommand. `args` excludes the program name. JSON reports go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coarse_menger
