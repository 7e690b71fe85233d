#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lvb {

/// Exit statuses of the command line tool.
enum ExitStatus { kExitOk = 0, kExitVerifyFailed = 1, kExitInputError = 2 };

/// Runs the lvb tool on args (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lvb
