#pragma once

#include <iosfwd>

namespace qgrad::bench {

enum ExitCode : int {
  kExitOk = 0,
  kExitIoError = 1,
  kExitBadFlags = 2,
  kExitUnknownFunction = 3,
};

/// Entry point of the qgrad_bench tool. CSV goes to --out or `out`,
/// diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qgrad::bench
