#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ehall {

/// Exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_verification = 2, exit_internal = 3 };

/// Runs the ehall command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ehall
