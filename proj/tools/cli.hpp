#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hpcoh {

// Runs the command line `args` (without the program name). Returns the exit
// code: 0 success, 1 invalid input, 2 internal-consistency failure.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hpcoh
