#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tilek::cli {

/// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kMismatch = 2;

/// Runs the tool on argv-style arguments (args[0] is the program name).
/// Everything is written to the given streams, so tests can run it in-process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tilek::cli
