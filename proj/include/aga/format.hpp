#pragma once

#include <charconv>
#include <string>

namespace aga {

// Shortest round-trip decimal form of a double, locale independent.
inline std::string format_number(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

inline std::string format_number(std::uint64_t value) {
    char buf[24];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

}  // namespace aga
