#pragma once

#include <cstdint>
#include <vector>

namespace gadic {

/// All primes <= bound, ascending, by a segmented sieve of Eratosthenes.
/// Returns an empty vector for bound < 2.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

}  // namespace gadic
