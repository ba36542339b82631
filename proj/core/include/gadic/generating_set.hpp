#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gadic/integer.hpp"

namespace gadic {

/// Declarative description of a symmetric generating set S of the integers.
///
///   single_base g:   S = {±g^i : i >= 0}
///   prime_set P:     union of the single-base sets over the primes in P;
///                    an empty P means "all primes" (cut off by whatever
///                    magnitude bound a consumer supplies)
///   explicit_list:   the listed positive integers and their negations,
///                    taken literally (no closure under powers)
///
/// Text form, used by the CLI: "g:5", "primes:all", "primes:2,3,7",
/// "list:1,2,9".
struct GeneratingSetDescriptor {
    enum class Kind { single_base, prime_set, explicit_list };

    Kind kind = Kind::single_base;
    std::int64_t base = 2;              // single_base
    bool all_primes = false;            // prime_set
    std::vector<std::int64_t> primes;   // prime_set, ignored when all_primes
    std::vector<Integer> elements;      // explicit_list

    static GeneratingSetDescriptor single(std::int64_t g);
    static GeneratingSetDescriptor prime_list(std::vector<std::int64_t> primes);
    static GeneratingSetDescriptor every_prime();
    static GeneratingSetDescriptor list(std::vector<Integer> elements);

    /// Parses the text form. Throws std::invalid_argument on malformed input.
    static GeneratingSetDescriptor parse(const std::string& text);

    std::string to_string() const;
};

/// All positive elements of the described set with value <= magnitude_bound,
/// deduplicated (1 appears once even though it is a zeroth power of every
/// base) and sorted ascending. Requires magnitude_bound >= 1.
std::vector<Integer> enumerate_generators(const GeneratingSetDescriptor& s,
                                          const Integer& magnitude_bound);

}  // namespace gadic
