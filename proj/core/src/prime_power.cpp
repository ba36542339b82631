#include "gadic/prime_power.hpp"

#include <stdexcept>

#include "gadic/primality.hpp"
#include "gadic/prime_sieve.hpp"

namespace gadic {

std::string PrimePower::to_string() const {
    if (exp == 0)
        return "1";
    if (exp == 1)
        return base.str();
    return base.str() + "^" + std::to_string(exp);
}

Integer integer_kth_root(const Integer& n, unsigned k) {
    if (n < 0)
        throw std::invalid_argument("kth root requires n >= 0");
    if (k < 1)
        throw std::invalid_argument("kth root requires k >= 1");
    if (n == 0)
        return 0;
    if (k == 1)
        return n;

    const unsigned bits = boost::multiprecision::msb(n) + 1;
    if (k >= bits)
        return 1;  // 1 <= n < 2^k

    // Newton iteration from an overestimate; strictly decreasing until it
    // lands on the floor of the root.
    Integer x = Integer(1) << ((bits + k - 1) / k);
    while (true) {
        Integer y = ((k - 1) * x + n / integer_pow(x, k - 1)) / k;
        if (y >= x)
            break;
        x = y;
    }
    while (integer_pow(x, k) > n)
        --x;
    return x;
}

std::optional<PrimePower> is_prime_power(const Integer& n) {
    if (n < 1)
        throw std::invalid_argument("prime-power test requires n >= 1");
    if (n == 1)
        return PrimePower::unit();
    if (n % 2 == 0) {
        // Even prime powers are exactly the powers of two.
        const unsigned e = boost::multiprecision::lsb(n);
        if (n == Integer(1) << e)
            return PrimePower{2, e};
        return std::nullopt;
    }

    // A small odd factor settles the question: n is then a prime power iff
    // that factor divides it out completely.
    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull,
                            37ull, 41ull, 43ull, 47ull, 53ull, 59ull, 61ull, 67ull, 71ull, 73ull,
                            79ull, 83ull, 89ull, 97ull}) {
        if (n % p == 0) {
            Integer rest = n;
            unsigned e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            if (rest == 1)
                return PrimePower{Integer(p), e};
            return std::nullopt;
        }
    }

    // No factor <= 97, so any prime base is >= 101 and the exponent is at
    // most log_101(n); probe largest exponents first.
    const unsigned bits = boost::multiprecision::msb(n) + 1;
    unsigned max_exp = std::max(1u, static_cast<unsigned>(bits / 6.6582));  // log2(101) = 6.658
    for (unsigned k = max_exp; k >= 1; --k) {
        const Integer root = integer_kth_root(n, k);
        if (integer_pow(root, k) == n && is_prime(root).passed())
            return PrimePower{root, k};
    }
    return std::nullopt;
}

}  // namespace gadic
