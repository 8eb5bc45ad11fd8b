// In-process entry point for the command line tool.
//
// run_cli parses the argument vector (without the program name), writes
// human- or machine-readable results to `out` and diagnostics to `err`,
// and returns the process exit code: 0 on success, 1 when a construction
// hypothesis, search budget, or verification fails, 2 on bad arguments.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsat {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsat
