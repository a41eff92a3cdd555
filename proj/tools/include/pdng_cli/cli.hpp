#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pdng::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInput = 2,
  kRedAlert = 3,
};

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // end of namespace pdng::cli
