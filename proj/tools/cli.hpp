#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cohlab::cli {

// Command dispatch behind the `cohlab` binary, separated out so tests can
// drive it in-process. Exit codes: 0 the command succeeded (for `check`: the
// property holds), 1 the checked property fails, 2 any validation/IO error
// (one machine-parseable line on the diagnostic stream).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cohlab::cli
