#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polycirc::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,
  kUsage = 2,
  kParse = 3,
  kPrecondition = 4,
  kInconclusive = 5,
};

/// Runs one subcommand. `args` excludes the program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace polycirc::cli
