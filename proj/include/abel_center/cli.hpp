#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abel_center {

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one abel-center command. The certificate goes to `out`, diagnostics
/// to `err`. Returns 0 for a computed verdict (negative verdicts included),
/// 1 for input errors and 2 for internal invariant breaches.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abel_center
