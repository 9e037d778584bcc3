#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbiknot {

enum ExitCode : int { kExitOk = 0, kExitDomainError = 1, kExitBudgetError = 2 };

/// Parses `args` (without the program name), runs the subcommand, and writes
/// the result to `out` and diagnostics to `err`.
int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

}  // namespace orbiknot
