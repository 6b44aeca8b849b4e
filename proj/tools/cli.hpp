#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpramsey::cli {

enum ExitCode : int {
    success = 0,
    check_failed = 1,
    usage_error = 2,
    budget_exceeded = 3,
};

/// Runs one command. `args` excludes the program name.
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

} // namespace gpramsey::cli
