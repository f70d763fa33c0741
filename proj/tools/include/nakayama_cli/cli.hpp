#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nakayama::cli {

enum ExitCode : int { ok = 0, assertion_failed = 1, usage_error = 2 };

/// Parses argv (without the program name) and runs one verb. Documents go
/// to `out` unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nakayama::cli
