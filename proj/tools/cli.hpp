#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mikado::cli {

// Runs one CLI invocation (args without the program name). Exit status:
// 0 success, 1 a theorem-class check failed, 2 usage or configuration
// error. All output is deterministic: identical inputs give identical
// bytes.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mikado::cli
