#pragma once

#include <iosfwd>

namespace cyclat::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputStructure = 2,
  kVerificationFailure = 3,
};

/// Runs one `cyclat` invocation; documents go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclat::cli
