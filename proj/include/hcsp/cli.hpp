#ifndef HCSP_CLI_HPP
#define HCSP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hcsp::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1, ///< a predicate subcommand answered "no"
  kUsage = 2,    ///< bad arguments, unreadable input, or a library error
};

/// Runs one command line. args excludes the program name. "-" as a file
/// name reads `in`; reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err);

} // namespace hcsp::cli

#endif
