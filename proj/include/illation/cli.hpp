#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace illation::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // not a tautology, unsatisfiable, an axiom fails
inline constexpr int kExitUsage = 2;     // bad arguments, parse or format errors
inline constexpr int kExitLimit = 3;

// args[0] is the program name. Nothing is written to `out` when the result is kExitUsage.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace illation::cli
