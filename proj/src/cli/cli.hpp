#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mlein::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kEvaluation = 3 };

/// Runs one command; args excludes the program name. Data goes to out,
/// diagnostics to err. Nothing is written to out unless the command succeeds.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mlein::cli
