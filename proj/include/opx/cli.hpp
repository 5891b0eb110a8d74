#ifndef OPX_CLI_HPP
#define OPX_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace opx {

// Runs one command line (without the program name).  Writes the result
// document to out and a one-line error object to err when applicable.
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opx

#endif
