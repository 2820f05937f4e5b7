#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gapfire::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,  // illegal trigger, out-of-range k, violations found
  kUsageError = 2,   // bad flags or unparsable input text
  kResourceCap = 3,  // node cap or depth limit hit
};

// Runs one command line. args excludes the program name. Results go to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gapfire::cli
