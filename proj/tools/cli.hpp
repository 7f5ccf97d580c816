#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sierpinski::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Output goes to out
/// unless --out names a file; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Regenerates every table listed in dir/manifest.json and compares it
/// byte-for-byte with the stored file.
int check_fixtures(const std::string& dir, std::ostream& out, std::ostream& err);

}  // namespace sierpinski::cli
