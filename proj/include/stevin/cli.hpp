#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stevin {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMathError = 1;
inline constexpr int kExitUsage = 2;

// Runs one command. `args` excludes the program name. Reports go to `out`
// (text, or JSON with --json); usage problems go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stevin
