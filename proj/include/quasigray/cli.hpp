#pragma once

#include <ostream>

namespace quasigray {

/// Exit codes: 0 success or pass, 1 verification or bound failure,
/// 2 usage or parameter error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv);

}  // namespace quasigray
