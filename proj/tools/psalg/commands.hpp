#ifndef PSALG_TOOLS_COMMANDS_HPP
#define PSALG_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace psalg::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Parses `args` (without the program name), runs one subcommand and writes
/// its result to `out`; diagnostics go to `err`. "-" as an input path reads
/// standard input from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace psalg::cli

#endif
