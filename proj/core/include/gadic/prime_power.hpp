#pragma once

#include <optional>
#include <string>

#include "gadic/integer.hpp"

namespace gadic {

/// A prime power p^k with k >= 1, or the unit 1 (= p^0, admitted as a
/// generator alongside proper prime powers).
struct PrimePower {
    Integer base = 1;
    unsigned exp = 0;  // 0 only for the unit

    static PrimePower unit() { return {}; }
    bool is_unit() const { return exp == 0; }

    Integer value() const { return exp == 0 ? Integer(1) : integer_pow(base, exp); }

    /// "1", "7", "2^10".
    std::string to_string() const;

    bool operator==(const PrimePower&) const = default;
};

/// Exact floor(n^(1/k)) for n >= 0, k >= 1.
Integer integer_kth_root(const Integer& n, unsigned k);

/// Prime-power decomposition of n >= 1: the unit for n = 1, (p, k) with p
/// prime and k maximal when n = p^k, nullopt otherwise. Exponents are probed
/// from the largest plausible k downward, so perfect powers of small primes
/// are recognized without factoring.
std::optional<PrimePower> is_prime_power(const Integer& n);

}  // namespace gadic
