#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wedgecrys::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kSchema = 2,
  kDimension = 3,
  kPrecision = 4,
  kCheckFailed = 5,
};

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Prime used when a command omits --p: $WEDGECRYS_DEFAULT_P, else 3.
long default_prime();

}  // namespace wedgecrys::cli
