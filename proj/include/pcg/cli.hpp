#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcg::cli {

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInconclusive = 2;
inline constexpr int kUsage = 64;
inline constexpr int kData = 65;

/// Runs one command line (without the program name). Payloads go to `out`,
/// diagnostics to `err`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string version_string();

}  // namespace pcg::cli
