#pragma once

#include <vector>

#include "gadic/integer.hpp"

namespace gadic {

struct Length3SieveOptions {
    unsigned two_power_cap = 40;  // J: exponents 0..J are checked
    unsigned threads = 0;         // 0 = hardware concurrency
};

/// Odd n in [lo, hi] such that n is neither 1 nor a prime power and no
/// |n - 2^j| or n + 2^j with 0 <= j <= J is 1 or a prime power. Survivors
/// are candidates for word length 3 relative to the recorded cap, not
/// certificates. lo and hi must be odd with 1 <= lo <= hi.
///
/// Small shifts are resolved against a shared prime-power bitmap; larger
/// ones fall back to direct prime-power tests. The range is split into
/// chunks processed by a small thread pool; output is sorted ascending and
/// independent of the thread count.
std::vector<Integer> sieve_length3_candidates(const Integer& lo, const Integer& hi,
                                              const Length3SieveOptions& options = {});

}  // namespace gadic
