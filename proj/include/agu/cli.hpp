#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace agu {

/// Runs the `agu` command line (without the program name). Returns the exit
/// status: 0 success, 1 input or validation error, 2 budget exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace agu
