#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace perfmatrix::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  ///< validation or comparison failure
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). All output
/// goes to `out`; warnings and errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace perfmatrix::cli
