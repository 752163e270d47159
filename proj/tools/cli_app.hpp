#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flowshop::cli {

/// Runs the batch CLI. `args` excludes the program name. Returns the process
/// exit code: 0 success, 1 usage or validation error, 2 search cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flowshop::cli
