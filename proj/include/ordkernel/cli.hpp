#pragma once
// Command line front end. run_cli takes the argument vector without the
// program name and writes all output, including error messages, to out.
//
// Exit codes: 0 success, 2 usage error, 3 domain or contract violation,
// 4 resource or budget limit.

#include <ostream>
#include <string>
#include <vector>

namespace ordkernel {

int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace ordkernel
