#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Command-line front end. Exit codes: 0 success, 2 usage or parse error,
// 3 I/O error. Reports go to `out` as one JSON object per line.
namespace pnorm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pnorm::cli
