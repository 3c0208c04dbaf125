#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinorb {

/// Exit codes of the command-line driver.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitBudget = 2,
  kExitMismatch = 3,
};

/// Runs one subcommand; args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace spinorb
