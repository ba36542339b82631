#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gadic/integer.hpp"

namespace gadic {

/// Minimal g-adic expansion: a finite signed-digit representation
/// n = sum_i digits[i] * g^i, least significant digit first, with the digit
/// constraints that make it unique and geodesic in the Cayley graph of
/// (Z, {±g^i}):
///
///   odd  g: |digits[i]| <= (g-1)/2;
///   even g: |digits[i]| <= g/2, and a digit of magnitude g/2 forces the next
///           digit to have magnitude < g/2 and a compatible sign
///           (digits[i] * digits[i+1] >= 0, with the digit past the end
///           treated as 0).
///
/// Zero is the empty digit vector. The word length of n equals the sum of the
/// digit magnitudes.
struct GAdicExpansion {
    std::int64_t base = 2;
    std::vector<std::int64_t> digits;
    Integer value;  // cached; always equals the digit sum

    /// Sum of |digits[i]|, i.e. the g-length of `value`.
    Integer length() const;

    /// "[1, -1, 2]"; "[]" for zero.
    std::string to_string() const;

    bool operator==(const GAdicExpansion&) const = default;
};

/// Evaluates sum_i digits[i] * base^i.
Integer expansion_value(std::int64_t base, const std::vector<std::int64_t>& digits);

/// Computes the unique minimal g-adic expansion of n. Requires g >= 2.
GAdicExpansion expand(const Integer& n, std::int64_t g);

/// g-length of n: the word-metric distance from 0 to n over generators
/// {±g^i}, computed as the digit-magnitude sum of expand(n, g).
Integer g_length(const Integer& n, std::int64_t g);

/// Orders two expansions over the same base using only their digits: pad
/// with zeros, find the highest index where they differ, and compare those
/// digits. Agrees with the order of the represented integers.
std::strong_ordering compare_by_digits(const GAdicExpansion& a, const GAdicExpansion& b);

/// Convenience overload: expands m and n in base g first.
std::strong_ordering compare_by_digits(const Integer& m, const Integer& n, std::int64_t g);

/// Returns a human-readable description of every violated expansion
/// invariant; empty means the expansion is valid.
std::vector<std::string> validate(const GAdicExpansion& e);

}  // namespace gadic
