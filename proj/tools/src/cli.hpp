#pragma once

#include <ostream>

namespace cognet {

enum ExitCode : int {
  kExitOk = 0,
  kExitNumerical = 1,
  kExitUsage = 2,
  kExitValidation = 3,
};

// Runs one command. Output goes to --out when given, else to `out`;
// diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cognet
