#pragma once

#include <cstdint>
#include <map>

#include "gadic/integer.hpp"

namespace gadic {

struct FactorOptions {
    std::uint64_t trial_division_bound = 10000;
    std::uint64_t rho_iteration_budget = 10'000'000;  // per split attempt
};

/// Complete factorization of n >= 2 as prime -> exponent. Trial division up
/// to the configured bound, then Brent-cycle Pollard rho on what remains.
/// Primality of the recorded factors is certified by is_prime (probabilistic
/// above 2^64). Throws computation_error when a composite refuses to split
/// within the rho budget.
std::map<Integer, unsigned> factor(const Integer& n, const FactorOptions& options = {});

}  // namespace gadic
