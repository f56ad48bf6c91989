#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liecheck {

// Exit codes: 0 success, 1 usage error, 2 counterexample or
// expectation mismatch, 3 unsupported modular case / library error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace liecheck
