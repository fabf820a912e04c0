#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mintri::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kMalformed = 3,
  kIo = 4,
  kInternal = 5,
};

/// Runs one command line (without the program name). Reports and error
/// objects go to `out`; help text goes to `out` as well.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace mintri::cli
