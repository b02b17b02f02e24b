#pragma once

#include <iosfwd>

namespace spexlab::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kCapacity = 3,
  kInternal = 4,
};

/// Runs one command line. Documents go to files or `out` (for `-`),
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spexlab::cli
