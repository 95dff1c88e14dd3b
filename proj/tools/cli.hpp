#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace satmat::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;
inline constexpr int kBudgetExceeded = 3;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace satmat::cli
