#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fplab {

// Parses and runs one command line (program name excluded). Reports go to
// `out`, diagnostics to `err`. Exit codes: 0 ok, 1 usage, 2 budget,
// 3 contract violation, 4 failed checks.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace fplab
