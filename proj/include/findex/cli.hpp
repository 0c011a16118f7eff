#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace findex {

/// Run the command-line front end on an argument vector (program name not
/// included). Streams are injectable so the CLI is testable in-process.
/// Exit codes: 0 success, 1 usage/parse/validation error, 2 verification
/// failure.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

} // namespace findex
