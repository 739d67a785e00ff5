#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coxwb {

/// Exit codes: 0 success, 1 a verification check failed, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out` as JSON, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxwb
