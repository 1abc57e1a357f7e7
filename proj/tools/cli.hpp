#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace majority::cli {

// Runs one command line (args excludes the program name). Returns the exit
// code: 0 on success, 1 on a failed claim or rule violation, 2 on bad input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace majority::cli
