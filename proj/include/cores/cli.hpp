#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cores {

// Runs one CLI command. Exit status: 0 on success, 1 on a verification
// mismatch, 2 on invalid input. Identical argument vectors produce
// byte-identical output.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cores
