#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagdes {

/// Exit codes: 0 success, 1 verification failure, 2 bad input, 3 cap exceeded.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace flagdes
