#pragma once

#include <ostream>

namespace ffcount::cli {

/// Full command-line tool behind the ffcount binary, separated from main()
/// so tests can drive it with captured streams. Returns the process exit
/// code: 0 on success with no inconsistency found, 1 when any verification
/// came back inconsistent, 2 on usage, input or budget errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ffcount::cli
