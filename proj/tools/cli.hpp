#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rittforge::cli {

/// Runs one invocation of the rittforge tool. `args` excludes the program
/// name. Returns 0 on success, 1 on a domain error (reported as
/// {"error": ...} on `out`) and 2 on an argument error (usage on `err`).
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rittforge::cli
