#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sepstat::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

/// Runs the sepstat command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sepstat::cli
