#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tesler::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCeiling = 3;

/// Parses and runs one subcommand. Nothing is written to std::cout/cerr
/// directly, so the CLI can be driven from tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Convenience form; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tesler::cli
