#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kummer {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

/// Parses `args` (without the program name), runs the subcommand and returns
/// the exit status: 0 success, 1 usage or input error, 2 theorem violation or
/// failed verify.
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kummer
