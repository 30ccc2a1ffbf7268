#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace noodle::cli {

/// Dispatches a full command line (without argv[0]). Results go to `out`,
/// diagnostics and timing to `err`. Returns the process exit code:
/// 0 success, 2 usage error, 3 resource-cap error, 1 anything else.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace noodle::cli
