#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mgraph {

/// Dispatches one CLI invocation (argv without the program name).
/// Reports are deterministic: exact rationals print as p/q, floating values
/// with 12 significant digits, no timestamps.
/// Exit code: 0 success, 1 verification failure, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace mgraph
