#pragma once

#include <string>
#include <vector>

namespace tamedeg {

/// Exit codes: 0 success, 1 negative answer, 2 usage or domain error.
struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Runs one command line (without the program name).
CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace tamedeg
