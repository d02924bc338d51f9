#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cp2b {

/// Runs one CLI command. Structured output (--json) goes to `out` as a single
/// JSON object with fields command/status/payload; human-readable text mode
/// writes plain lines to `out`. Usage problems are reported on `err`.
/// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cp2b
