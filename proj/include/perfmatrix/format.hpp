#pragma once

// Locale-independent number rendering.

#include <string>

namespace perfmatrix {

/// Shortest representation that round-trips to the same double.
std::string format_full(double value);

/// Fixed notation carrying `significant` significant figures; integral parts
/// wider than that are never truncated (176719 stays 176719 at 4 figures).
std::string format_significant(double value, int significant);

} // namespace perfmatrix
