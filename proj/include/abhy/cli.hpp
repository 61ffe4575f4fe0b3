#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abhy {

/// Exit codes: 0 success, 1 verification failed, 2 invalid input, 3 cap exceeded.
int cli_dispatch(const std::vector<std::string>& args, std::istream& in,
                 std::ostream& out, std::ostream& err);

}  // namespace abhy
