#ifndef HOL_CLI_HPP
#define HOL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hol::cli {

// Runs one command (args without the program name) and returns the exit
// code: 0 success/accepted, 1 rejected, 2 usage or parse errors. Output
// is deterministic for a given command.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hol::cli

#endif
