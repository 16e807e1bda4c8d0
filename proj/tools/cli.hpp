#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace padicq::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kPrecision = 3 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padicq::cli
