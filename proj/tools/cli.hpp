#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trackcut::cli {

enum ExitCode : int {
    kOk = 0,
    kInfeasible = 1,  // infeasible instance or failed verification
    kUsage = 2,       // bad flags, unreadable or malformed input
    kCapExceeded = 3, // an exhaustive check hit its configured cap
};

/// Runs `trackcut <args...>` (args excludes the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trackcut::cli
