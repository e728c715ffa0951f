#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smot {

// Command-line front end; returns the process exit code.
// 0: success / verified; 1: a verification or certification check failed;
// 2: bad usage, unreadable input, or an order precondition violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smot
