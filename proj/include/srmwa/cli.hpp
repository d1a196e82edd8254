#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace srmwa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitConfig = 2;

/// Entry point of the srmwa tool. `args` excludes the program name.
/// Returns 0 on success, 2 on an invalid configuration and 1 on I/O failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srmwa::cli
