#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace acyc::cli {

enum ExitStatus { kOk = 0, kViolation = 1, kError = 2 };

// Runs one command line (without the program name) and writes the report to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace acyc::cli
