#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tiltwall {

enum ExitCode : int { kExitOk = 0, kExitParse = 1, kExitDomain = 2 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tiltwall
