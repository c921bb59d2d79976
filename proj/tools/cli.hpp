#pragma once

#include <ostream>

namespace lpq::cli {

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitProperty = 3;
// Largest p_max accepted by `verify`.
inline constexpr long kVerifyBound = 100;

/// Parses argv, runs one subcommand, writes the envelope to out and diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lpq::cli
