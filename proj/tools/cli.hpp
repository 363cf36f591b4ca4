#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilclean::cli {

enum ExitCode : int {
  kOk = 0,
  kSuiteViolation = 1,
  kInputError = 2,
  kResourceLimit = 3,
};

// `args` excludes the program name. Reports go to `out`, diagnostics to
// `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace nilclean::cli
