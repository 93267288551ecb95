#pragma once

#include <ostream>

namespace kcycles::cli {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitCap = 3,
  kExitVerifyFailed = 4,
  kExitIo = 5,
};

// Parses argv and runs one subcommand, writing results to `out` and
// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kcycles::cli
