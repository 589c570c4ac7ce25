#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arthur::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitUsage = 64;

/// Entry point of arthur-calc. args excludes the program name. Reports go
/// to `out` as one JSON document; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arthur::cli
