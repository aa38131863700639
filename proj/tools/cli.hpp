#pragma once

#include <iosfwd>

namespace fracvoigt::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNotConverged = 1,
  kUsage = 2,
  kIo = 3,
};

// Runs the command line.  CSV goes to `out` unless -o is given; messages and
// log output go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fracvoigt::cli
