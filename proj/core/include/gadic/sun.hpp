#pragma once

#include <string>
#include <vector>

#include "gadic/integer.hpp"
#include "gadic/primality.hpp"

namespace gadic {

/// The residue class x = M (mod N) contains no integer of the form
/// |p^a +- q^b| (p, q prime, a, b >= 0), which makes its non-prime-power
/// members certified word-length-3 integers. N is the corrected modulus;
/// a transcription of it with a wrong middle block has circulated, so the
/// value here is pinned by tests.
struct SunConstants {
    static const Integer& M();
    static const Integer& N();
};

/// true iff x = M (mod N).
bool sun_class_member(const Integer& x);

/// Re-derivation of the classical example in this congruence class:
///   1. M and M + N pass primality testing (probable primes; they exceed
///      the deterministic range),
///   2. M + 2N equals its known 30-digit decimal value,
///   3. M + 2N factors as 23 * 299723 * 19295212676140402555471,
///   4. M + 2N is not a prime power.
/// Together with class membership this pins the word length of M + 2N at 3.
struct SunVerification {
    struct Check {
        std::string name;
        bool passed = false;
        std::string detail;
    };
    std::vector<Check> checks;

    bool all_passed() const;
};

SunVerification verify_sun_example(const PrimalityOptions& options = {});

}  // namespace gadic
