#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stabrep::cli {

// Runs one command line (args[0] is the program name). Results go to out,
// diagnostics to err. Exit codes: 0 success, 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stabrep::cli
