#pragma once

#include <iosfwd>

namespace tendo::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitInconclusive = 3,
};

/// Entry point of the command-line tool, with the streams injected for testing.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tendo::cli
