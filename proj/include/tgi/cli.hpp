#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tgi::cli {

/// Exit codes shared by all subcommands.
enum ExitCode : int {
    kOk = 0,
    kUsage = 2,        ///< bad flags or incompatible shapes
    kIo = 3,           ///< unreadable or unwritable files
    kNumerical = 4,    ///< factorization failure, failed certificate, inconsistent system
    kNotConverged = 5, ///< an iterative solver stopped at its iteration cap
};

/// Runs `tgi <args...>` (args excludes the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tgi::cli
