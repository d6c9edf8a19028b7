#pragma once

#include <iosfwd>

namespace linkroots::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;   // a yes/no question answered "no"
inline constexpr int kUsage = 2;      // bad arguments or malformed input
inline constexpr int kBudget = 3;     // a size, leaf or time budget ran out
inline constexpr int kInternal = 4;   // a checked invariant failed

// Runs one subcommand. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace linkroots::cli
