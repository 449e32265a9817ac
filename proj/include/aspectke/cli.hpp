#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aspectke {

// `args` excludes the program name. Returns the process exit status:
// 0 success, 1 load or usage error, 2 step budget exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aspectke
