#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace congestlb {

// Entry point of the congestlb tool; args exclude the program name.
// Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace congestlb
