#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace renyi {

/// Exit codes: 0 success, 2 invalid input or usage, 1 internal error.
/// `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace renyi
