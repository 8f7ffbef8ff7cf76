#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace uqosp {

/// Runs one command line (without the program name). Returns 0 when every
/// requested check passes, 1 on a verification failure, 2 on a usage or
/// configuration error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uqosp
