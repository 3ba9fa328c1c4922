#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace witt::cli {

/// Runs the `witt` command line (args excludes the program name). Writes JSON
/// to `out`. Returns 0 on success, 2 on domain or usage errors, 1 on internal
/// errors and failed verify suites.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace witt::cli
