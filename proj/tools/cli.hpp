#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcover::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kAbsent = 2;

// Runs one command line (args excludes the program name). Results go to
// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcover::cli
