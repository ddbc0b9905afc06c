#pragma once

#include <iosfwd>

namespace ktf::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kAmbiguousExtension = 2,
  kUndeterminedPositivity = 3,
  kNegativeResult = 4, ///< `elliott compare` unequal, `verify` with failures
};

/// Entry point of the `ktf` tool; argv[0] is the program name.
int run(int argc, const char *const *argv, std::istream &in, std::ostream &out,
        std::ostream &err);

} // namespace ktf::cli
