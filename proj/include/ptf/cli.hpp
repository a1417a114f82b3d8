#pragma once

#include <iosfwd>

namespace ptf {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitVerification = 1, kExitUsage = 2, kExitResource = 3 };

/// Runs the `ptf` command line. Results go to `out`; usage text, errors and
/// (without --manifest) the run manifest go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ptf
