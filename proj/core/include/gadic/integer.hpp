#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace gadic {

// All public entry points work on arbitrary-precision integers; several of
// the interesting inputs (the ~10^28 congruence-class constants, lambda_2(20))
// do not fit in 64 bits.
using Integer = boost::multiprecision::cpp_int;

// Parses a decimal integer with optional leading '-'. Throws
// std::invalid_argument on anything else (hex, whitespace, empty input).
inline Integer parse_integer(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size())
        throw std::invalid_argument("malformed integer: '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("malformed integer: '" + text + "'");
    return Integer(text);
}

inline Integer integer_pow(const Integer& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

// Range-checked narrowing; throws std::invalid_argument when n does not fit.
inline std::int64_t to_int64(const Integer& n) {
    if (n > std::numeric_limits<std::int64_t>::max() ||
        n < std::numeric_limits<std::int64_t>::min())
        throw std::invalid_argument("integer out of 64-bit range: " + n.str());
    return static_cast<std::int64_t>(n);
}

inline Integer abs_integer(const Integer& n) {
    return boost::multiprecision::abs(n);
}

}  // namespace gadic
