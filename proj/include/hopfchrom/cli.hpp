#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfchrom {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_verification_failed = 1, exit_input_error = 2 };

/// Runs the hopfchrom command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfchrom
