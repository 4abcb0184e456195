#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBudget = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitSemantic = 3;
inline constexpr int kExitCheckFailed = 4;

/// Runs one `rkit` subcommand. `args` excludes the program name. The JSON
/// run report goes to `out`, diagnostics to `err`; returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace rkit
