#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace realknot {

/// Exit codes of the command-line tool.
enum ExitCode { kExitOk = 0, kExitParse = 2, kExitMath = 3, kExitInternal = 4 };

/// Runs the tool on args (without the program name). "-" paths read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace realknot
