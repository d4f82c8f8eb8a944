#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symspine::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyFalse = 1,
  kMalformedInput = 2,
  kCapExceeded = 3,
};

/// Runs one invocation. `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symspine::cli
