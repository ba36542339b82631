#include "gadic/factorization.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gadic/errors.hpp"
#include "gadic/primality.hpp"
#include "gadic/prime_power.hpp"
#include "gadic/prime_sieve.hpp"

namespace gadic {

namespace {

Integer gcd(Integer a, Integer b) {
    return boost::multiprecision::gcd(a, b);
}

// Brent's variant of Pollard rho: returns a nontrivial factor of an odd
// composite n, or throws once the iteration budget is spent. Deterministic
// (fixed start, polynomial offsets 1, 2, 3, ...).
Integer rho_split(const Integer& n, std::uint64_t budget) {
    std::uint64_t spent = 0;
    for (Integer c = 1; spent < budget; ++c) {
        Integer x = 2, y = 2, q = 1, d = 1;
        std::uint64_t power = 1, lam = 0;
        const auto step = [&](const Integer& v) { return (v * v + c) % n; };

        while (spent < budget) {
            if (lam == power) {
                x = y;
                power *= 2;
                lam = 0;
            }
            // Accumulate |x - y| products and take one gcd per batch.
            const Integer batch_start = y;
            const std::uint64_t batch = std::min<std::uint64_t>(128, power - lam);
            for (std::uint64_t i = 0; i < batch; ++i) {
                y = step(y);
                q = q * abs_integer(x - y) % n;
            }
            spent += batch;
            lam += batch;
            d = gcd(q, n);
            if (d == 1)
                continue;
            if (d != n)
                return d;
            // Overshot: replay the batch one step at a time.
            y = batch_start;
            do {
                y = step(y);
                d = gcd(abs_integer(x - y), n);
            } while (d == 1);
            if (d != n)
                return d;
            break;  // cycle collapsed on n itself; restart with the next offset
        }
    }
    throw computation_error("Pollard rho exhausted its iteration budget on " + n.str());
}

}  // namespace

std::map<Integer, unsigned> factor(const Integer& n, const FactorOptions& options) {
    if (n < 2)
        throw std::invalid_argument("factorization requires n >= 2");

    std::map<Integer, unsigned> factors;
    Integer rest = n;

    for (std::uint64_t p : primes_up_to(options.trial_division_bound)) {
        if (Integer(p) * p > rest)
            break;
        while (rest % p == 0) {
            rest /= p;
            ++factors[Integer(p)];
        }
    }
    if (rest == 1)
        return factors;

    std::vector<Integer> pending{rest};
    while (!pending.empty()) {
        Integer m = pending.back();
        pending.pop_back();
        if (is_prime(m).passed()) {
            ++factors[m];
            continue;
        }
        if (auto pp = is_prime_power(m); pp && !pp->is_unit()) {
            factors[pp->base] += pp->exp;
            continue;
        }
        const Integer d = rho_split(m, options.rho_iteration_budget);
        pending.push_back(d);
        pending.push_back(m / d);
    }
    return factors;
}

}  // namespace gadic
