#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boxdim {

/// Exit statuses of the command line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitOracleLimit = 3,
};

/// Runs the `boxdim` command line with `args` (program name excluded). Documents are
/// read from files or, for "-", from `in`; every result goes to `out` as a document.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace boxdim
