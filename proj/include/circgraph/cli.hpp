#ifndef CIRCGRAPH_CLI_HPP
#define CIRCGRAPH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace circgraph::cli {

enum ExitCode : int { kSuccess = 0, kNegative = 1, kUsageError = 2 };

/// Runs one command. `args` excludes the program name. "-" as a file name
/// reads `in`. Output is buffered and written to `out` only on completion;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace circgraph::cli

#endif  // CIRCGRAPH_CLI_HPP
