#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bicomm::cli {

/// Exit codes of the command-line interface.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,    // includes a failed --verify self-check
  kBadInput = 2,
  kCapability = 3,  // DegreeTooLarge
  kPrecondition = 4,
};

/// Runs the CLI with argv-style arguments (args[0] is the program name).
/// Reports go to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bicomm::cli
