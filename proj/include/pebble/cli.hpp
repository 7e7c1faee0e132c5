#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pebble::cli {

// Process exit codes. 1 is used by `verify` and `oracle` for a negative verdict.
enum ExitCode : int {
    kOk = 0,
    kRejected = 1,
    kUnsolvable = 2,
    kUsage = 64,
    kResource = 65,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pebble::cli
