#pragma once

#include <iosfwd>

namespace ostrowski::cli {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the executable; all output goes to the given streams.
/// Subcommands: frac-int, check-convexity, verify, sweep, corpus-audit.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ostrowski::cli
