#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace strucprof {

// Dispatches the command line (without argv[0]). Data goes to `out`,
// diagnostics to `err`. Exit status: 0 success, 1 failed verify assertion,
// 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strucprof
