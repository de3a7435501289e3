#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace k3fib {

// Exit codes: 0 success, 1 domain error, 2 usage error, 3 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3fib
