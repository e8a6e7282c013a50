// Command-line front end. The command logic lives here so tests can drive it
// without spawning a process.

#ifndef LUP_TOOLS_COMMANDS_HPP
#define LUP_TOOLS_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lup::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kCapacity = 2,
  kVerificationFailure = 3,
};

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace lup::cli

#endif  // LUP_TOOLS_COMMANDS_HPP
