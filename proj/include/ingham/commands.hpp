#pragma once

#include <iosfwd>

namespace ingham {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2 };

/// Runs the `ingham` command line with the given arguments (argv[0] is the
/// program name). All output goes to `out` / `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ingham
