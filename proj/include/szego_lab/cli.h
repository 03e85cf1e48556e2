#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace szego {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_pass = 0, exit_check_failed = 1, exit_usage = 2 };

/// Runs the tool on `args` (without the program name). Results go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace szego
