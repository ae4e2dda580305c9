#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dickson::cli {

/// Runs one CLI invocation. args excludes the program name. Exit codes:
/// 0 success, 1 at least one failed check, 2 usage or validation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dickson::cli
