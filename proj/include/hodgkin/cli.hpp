#pragma once

#include <ostream>

namespace hodgkin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCertification = 2;
inline constexpr int kExitResource = 3;

/// Entry point of the command-line driver; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hodgkin::cli
