#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lexaug::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputFormat = 2,
  kConfig = 3,
};

/// Runs the command line; returns the process exit code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lexaug::cli
