#ifndef LW_CLI_HPP
#define LW_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lw::cli {

inline constexpr const char* kVersion = "0.2.0";

/// Runs the command line given argv-style arguments (without the
/// program name). Returns the process exit code: 0 all checks pass,
/// 1 property failure, 2 bad input, 3 internal invariant breach.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lw::cli

#endif
