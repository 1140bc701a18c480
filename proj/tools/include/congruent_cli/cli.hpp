#pragma once

// Argument parsing and dispatch for the `congruent` executable.  Kept apart
// from main() so tests can drive the full command line in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace congruent::cli {

// args excludes the program name.  Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace congruent::cli
