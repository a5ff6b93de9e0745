#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cartan::cli {

enum ExitCode : int { ok = 0, input_error = 1, inconclusive = 2 };

/// Runs one command line (without the program name). Returns the exit code:
/// 0 on success, 1 on usage or input errors, 2 when `check` leaves a case
/// inconclusive.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cartan::cli
