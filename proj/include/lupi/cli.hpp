// Command-line front end. Exposed as a library function so the commands can
// be driven in-process by tests.

#ifndef LUPI_CLI_HPP_
#define LUPI_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace lupi::cli {

/// Process exit statuses.
enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kNotVerified = 2,
  kNoConvergence = 3,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace lupi::cli

#endif  // LUPI_CLI_HPP_
