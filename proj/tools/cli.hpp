#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace covset::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitValidation = 65;
inline constexpr int kExitInternal = 70;
inline constexpr int kExitResource = 75;

/// Runs one command line (args exclude the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace covset::cli
