#pragma once

#include <iosfwd>

namespace fracheat {

/// Exit statuses of the command-line driver.
enum ExitStatus : int { kExitOk = 0, kExitFail = 1, kExitConfig = 2, kExitInconclusive = 3 };

/// Full command line including the program name. Normal output goes to `out`,
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fracheat
