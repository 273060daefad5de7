#pragma once
// Command-line front end. Exit codes: 0 success, 1 failed verification
// verdict, 2 validation/config error, 3 numerical failure.

#include <string>
#include <vector>

namespace szego::cli {

int run(int argc, const char* const* argv);

/// Same entry point with args excluding the program name (test harness use).
int run(const std::vector<std::string>& args);

}  // namespace szego::cli
