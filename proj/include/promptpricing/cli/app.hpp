#pragma once

#include <ostream>

namespace promptpricing::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 2,
  kExitNumerical = 3,
  kExitUsage = 4,
};

/// Parses arguments, runs one verb and writes its output files. Diagnostics
/// go to `err`, help text to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace promptpricing::cli
