#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zenosim::cli {

/// Runs one command line (args exclude the program name). Returns the exit status.
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int parse_and_dispatch(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace zenosim::cli
