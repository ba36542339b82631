#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gadic::cli {

// Exit codes: 0 success, 1 usage error, 2 computational failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitComputation = 2;

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics and progress to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gadic::cli
