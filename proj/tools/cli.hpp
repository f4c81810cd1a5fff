#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathhom::cli {

/// Runs the full command-line surface against the given argument vector
/// (program name excluded) and streams. Returns the process exit code:
/// 0 success / all checks pass, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathhom::cli
