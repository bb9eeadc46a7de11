#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sesh {

// Dispatches one command line (without the program name). Returns the process
// exit code: 0 for definite answers, 2 for Unknown verdicts (or, under
// --assert-complete, any indefinite output), 1 for input errors. Human tables
// and notes go to `out`/`err`; --format json switches `out` to one JSON
// document per invocation. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sesh
