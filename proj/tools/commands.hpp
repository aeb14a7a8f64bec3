#pragma once

#include <ostream>

namespace hyperq::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kBadParams = 2, kNumerical = 3 };

// Runs the tool with the given arguments; output goes to `out` unless --out is given.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperq::cli
