#ifndef SYLV_TOOLS_CLI_HPP
#define SYLV_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sylv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitInputError = 2;

/// Parses `args` (without the program name), dispatches the command and
/// writes its output to `out` and diagnostics to `err`. Returns the exit
/// status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sylv::cli

#endif  // SYLV_TOOLS_CLI_HPP
