#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncpq::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kUnsupportedType = 3,
  kCapExceeded = 4,
};

/// Entry point behind the `ncpq` binary. `args` excludes the program name.
/// Writes results to `out` (or to --out) and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncpq::cli
