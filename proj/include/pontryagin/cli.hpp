#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pontryagin {

/// Command-line entry point.  `args` excludes the program name.  Returns
/// 0 on success, 1 when a requested check fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pontryagin
