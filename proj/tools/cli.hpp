#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abspec::cli {

/// Parses one invocation (argv without the program name) and runs it.
/// The report goes to `out`, diagnostics to `err`. Exit status: 0 all checks
/// pass, 1 a checked property failed, 2 malformed input, 3 capacity exceeded.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abspec::cli
