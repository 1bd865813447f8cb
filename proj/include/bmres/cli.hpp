#pragma once

#include <iosfwd>

namespace bmres::cli {

// Runs the command line. Exit codes: 0 success, 1 negative verdict,
// 2 input error, 3 capacity or budget exhaustion.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bmres::cli
