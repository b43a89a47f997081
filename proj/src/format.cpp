#include "perfmatrix/format.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

namespace perfmatrix {

std::string format_full(double value)
{
    if (value == 0.0)
        return "0";
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

std::string format_significant(double value, int significant)
{
    significant = std::max(significant, 1);
    if (!std::isfinite(value))
        return format_full(value);
    if (value == 0.0)
        return "0";
    const int magnitude = static_cast<int>(std::floor(std::log10(std::abs(value))));
    int decimals = std::clamp(significant - 1 - magnitude, 0, 17);
    // 9.9996 at four figures rounds up into the next decade.
    if (decimals > 0 && std::abs(std::round(value * std::pow(10.0, decimals))) >= std::pow(10.0, significant))
        --decimals;
    std::array<char, 512> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                         std::chars_format::fixed, decimals);
    std::string out(buf.data(), ptr);
    if (out.find_first_not_of("-0.") == std::string::npos)
        return "0";
    return out;
}

} // namespace perfmatrix
