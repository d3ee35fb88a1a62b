#pragma once

#include <iosfwd>

namespace midlevel {

enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitUsage = 2, kExitCapacity = 3 };

/// Entry point of the `midlevel` command; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace midlevel
