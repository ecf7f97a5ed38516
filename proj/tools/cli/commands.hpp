#pragma once

#include <iosfwd>

namespace instanton::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitUsage = 2,  // usage, parse or prime-mismatch errors
  kExitInconclusive = 3,
};

/// Entry point of the `instanton` tool; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace instanton::cli
