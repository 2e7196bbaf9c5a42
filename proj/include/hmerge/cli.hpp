#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hmerge::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kInfeasible = 3,
  kBudgetExceeded = 4,
  kOracleMismatch = 5,
};

/// Runs one command. `args` excludes the program name. Profile input comes
/// from --values, a file path, or `in` when the path is "-" or absent.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace hmerge::cli
