#pragma once

#include <ostream>

namespace fppshield::cli {

enum ExitCode : int {
  kOk = 0,
  kCounterexamples = 1,
  kInputError = 2,
  kResourceLimit = 3,
  kInternalError = 4,
};

/// Entry point of the `fppshield` tool; all output goes to the given streams.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace fppshield::cli
