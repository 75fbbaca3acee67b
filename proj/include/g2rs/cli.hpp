#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace g2rs {

// Runs one CLI command (args exclude the program name).  Exit codes:
// 0 success / all checks pass, 1 check failed or runtime error, 2 usage or
// parse error.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace g2rs
