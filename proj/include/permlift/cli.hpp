#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace permlift::cli {

/// Exit codes of the command-line tool.
enum Exit : int {
  ok = 0,
  invalid_input = 1,
  resource_limit = 2,
  negative_result = 3,  // e.g. the two graphs are not equivalent
  internal_error = 4,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permlift::cli
