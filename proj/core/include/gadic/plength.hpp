#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gadic/integer.hpp"
#include "gadic/prime_power.hpp"

namespace gadic {

/// One term of a witness: +-p^a (a >= 0; the unit 1 is p^0).
struct SignedPrimePower {
    bool negative = false;
    PrimePower pp;

    Integer value() const { return negative ? -pp.value() : pp.value(); }
    std::string to_string() const { return (negative ? "-" : "") + pp.to_string(); }

    bool operator==(const SignedPrimePower&) const = default;
};

struct PLengthCaps {
    unsigned two_power_cap = 64;  // J: exponents 0..J are searched in two-term forms
};

/// Upper bound on the word length of n over all signed prime powers
/// (1 admitted), together with a witness achieving it. Bounds 1 and 2 are
/// sharp; a bound of 3 or 4 only certifies "no shorter witness within the
/// recorded two-power cap", so those n are candidates, not certified lengths.
struct PLengthReport {
    Integer n;
    int upper_bound = 0;  // in {1, 2, 3, 4}
    std::vector<SignedPrimePower> witness;
    unsigned two_power_cap = 0;  // cap in force while ruling out shorter lengths
    bool candidate = false;      // true iff upper_bound >= 3

    /// Witness terms re-evaluated and summed; used by self-checks and tests.
    Integer witness_sum() const;
    std::string witness_string() const;  // "2^7 - 1"
};

/// +-p^a equal to n, if |n| is 1 or a prime power. Requires n != 0.
std::optional<SignedPrimePower> length1_witness(const Integer& n);

/// Two-term witness within the exponent cap, or nullopt ("none within caps",
/// not a proof of length >= 3). Odd n is matched as +-2^j +- (odd prime power
/// or 1) for 0 <= j <= cap; even n additionally tries a Goldbach pair and
/// a capped difference scan over odd prime powers.
std::optional<std::pair<SignedPrimePower, SignedPrimePower>> length2_witness(
    const Integer& n, unsigned two_power_cap);

/// The Goldbach pair (p, q), p <= q primes, p + q = n, with the smallest
/// possible p. Requires even n >= 4. A miss inside the verified range would
/// be an internal error (computation_error).
std::pair<Integer, Integer> goldbach_pair(const Integer& n);

/// Primes p <= q <= r with p + q + r = n, for odd n > 5: p is the smallest
/// odd prime leaving n - p even and >= 4, the rest is a Goldbach pair.
std::array<Integer, 3> three_prime_decomposition(const Integer& n);

/// Word-length upper bound for n != 0: lengths 1, 2 (capped), 3, then 4 are
/// tried in order; a bound of at most 4 always exists.
PLengthReport plength_upper(const Integer& n, const PLengthCaps& caps = {});

/// Upper bound on the word length of n when the primes in `excluded` are not
/// available as generators: the unrestricted witness is computed first, and
/// every term whose base is excluded is replaced by a decomposition over the
/// remaining primes.
struct RestrictedLengthReport {
    Integer n;
    int upper_bound = 0;  // may exceed 4
    std::vector<SignedPrimePower> witness;
    std::vector<Integer> excluded;
};
RestrictedLengthReport restricted_prime_length(const Integer& n,
                                               const std::vector<Integer>& excluded,
                                               const PLengthCaps& caps = {});

}  // namespace gadic
