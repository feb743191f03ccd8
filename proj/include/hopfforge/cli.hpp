#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hopfforge::cli {

// Exit codes of the command-line front end.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_input_error = 2;

// Runs one invocation. `args` excludes the program name. Reports go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hopfforge::cli
