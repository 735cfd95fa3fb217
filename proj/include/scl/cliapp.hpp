#pragma once

// Command-line front end as a library call, so tests can drive it in
// process. Exit codes: 0 success, 1 mathematical "no" with a certificate
// in the report, 2 input errors.

#include <iosfwd>
#include <string>
#include <vector>

namespace scl {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scl
