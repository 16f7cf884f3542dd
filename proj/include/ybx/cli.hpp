#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ybx::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kCrossCheckFailure = 2 };

/// Runs `ybx <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ybx::cli
