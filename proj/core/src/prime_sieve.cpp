#include "gadic/prime_sieve.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace gadic {

namespace {

constexpr std::uint64_t kSegmentSize = 1 << 16;

// Odd-only base sieve up to `limit`, returning the primes themselves.
std::vector<std::uint64_t> simple_sieve(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2)
        return primes;
    std::vector<bool> composite(limit + 1, false);
    primes.push_back(2);
    for (std::uint64_t i = 3; i <= limit; i += 2) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += 2 * i)
            composite[j] = true;
    }
    return primes;
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    if (bound < 2)
        return {};
    const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(bound))) + 1;
    std::vector<std::uint64_t> base = simple_sieve(root);
    if (bound <= root)
        return {base.begin(), std::upper_bound(base.begin(), base.end(), bound)};

    std::vector<std::uint64_t> primes;
    primes.reserve(static_cast<std::size_t>(
        static_cast<double>(bound) / std::log(static_cast<double>(std::max<std::uint64_t>(bound, 3))) * 1.2));
    for (std::uint64_t p : base)
        if (p <= bound)
            primes.push_back(p);

    std::vector<bool> segment;
    for (std::uint64_t lo = root + 1; lo <= bound; lo += kSegmentSize) {
        const std::uint64_t hi = std::min(bound, lo + kSegmentSize - 1);
        segment.assign(static_cast<std::size_t>(hi - lo + 1), false);
        for (std::uint64_t p : base) {
            if (p * p > hi)
                break;
            std::uint64_t start = ((lo + p - 1) / p) * p;
            if (start < p * p)
                start = p * p;
            for (std::uint64_t j = start; j <= hi; j += p)
                segment[static_cast<std::size_t>(j - lo)] = true;
        }
        for (std::uint64_t n = lo; n <= hi; ++n)
            if (!segment[static_cast<std::size_t>(n - lo)])
                primes.push_back(n);
    }
    return primes;
}

}  // namespace gadic
