#include "gadic/plength.hpp"

#include <algorithm>
#include <stdexcept>

#include "gadic/bfs_oracle.hpp"
#include "gadic/errors.hpp"
#include "gadic/generating_set.hpp"
#include "gadic/primality.hpp"
#include "gadic/prime_sieve.hpp"

namespace gadic {

namespace {

constexpr std::int64_t kDifferenceScanBound = 1 << 16;  // odd-prime-power difference forms
constexpr std::int64_t kBfsReplacementBound = 2000;     // exact decompositions below this

const std::vector<std::uint64_t>& small_primes() {
    static const std::vector<std::uint64_t> list = primes_up_to(1'000'000);
    return list;
}

SignedPrimePower make_term(bool negative, PrimePower pp) {
    SignedPrimePower t;
    t.negative = negative;
    t.pp = std::move(pp);
    return t;
}

SignedPrimePower two_power_term(unsigned j, bool negative) {
    return make_term(negative, j == 0 ? PrimePower::unit() : PrimePower{2, j});
}

SignedPrimePower prime_term(const Integer& p, bool negative = false) {
    return make_term(negative, PrimePower{p, 1});
}

std::vector<SignedPrimePower> negate_all(std::vector<SignedPrimePower> terms) {
    for (auto& t : terms)
        t.negative = !t.negative;
    return terms;
}

// 1 or a prime power, as a term; nullopt otherwise. m must be >= 1.
std::optional<SignedPrimePower> positive_pp_term(const Integer& m) {
    if (auto pp = is_prime_power(m))
        return make_term(false, *pp);
    return std::nullopt;
}

}  // namespace

Integer PLengthReport::witness_sum() const {
    Integer sum = 0;
    for (const auto& t : witness)
        sum += t.value();
    return sum;
}

std::string PLengthReport::witness_string() const {
    std::string out;
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i == 0) {
            out = witness[i].to_string();
        } else {
            out += witness[i].negative ? " - " : " + ";
            out += witness[i].pp.to_string();
        }
    }
    return out;
}

std::optional<SignedPrimePower> length1_witness(const Integer& n) {
    if (n == 0)
        throw std::invalid_argument("0 has no positive word length");
    const bool negative = n < 0;
    if (auto pp = is_prime_power(abs_integer(n)))
        return make_term(negative, *pp);
    return std::nullopt;
}

std::optional<std::pair<SignedPrimePower, SignedPrimePower>> length2_witness(
    const Integer& n, unsigned two_power_cap) {
    if (n == 0)
        throw std::invalid_argument("0 has no positive word length");
    if (n < 0) {
        if (auto w = length2_witness(-n, two_power_cap)) {
            w->first.negative = !w->first.negative;
            w->second.negative = !w->second.negative;
            return w;
        }
        return std::nullopt;
    }

    // n = 2^j + a or n = b - 2^j with the other term a prime power or 1.
    // For odd n this is exhaustive within the cap: a two-term signed
    // prime-power sum with an odd total carries exactly one even term, and
    // even prime powers are the powers of two.
    Integer two_j = 1;
    for (unsigned j = 0; j <= two_power_cap; ++j, two_j <<= 1) {
        const Integer a = n - two_j;
        if (a != 0) {
            if (auto rest = positive_pp_term(abs_integer(a))) {
                rest->negative = a < 0;
                return std::make_pair(two_power_term(j, false), *rest);
            }
        }
        if (auto rest = positive_pp_term(n + two_j))
            return std::make_pair(*rest, two_power_term(j, true));
    }

    if (n % 2 == 0 && n >= 4) {
        // Goldbach pair, then a capped difference scan over odd prime powers.
        try {
            const auto [p, q] = goldbach_pair(n);
            return std::make_pair(prime_term(p), prime_term(q));
        } catch (const computation_error&) {
        }
        for (std::int64_t m = 3; m <= kDifferenceScanBound; m += 2) {
            const auto mt = positive_pp_term(Integer(m));
            if (!mt)
                continue;
            if (auto big = positive_pp_term(n + m))
                return std::make_pair(*big, make_term(true, mt->pp));
        }
    }
    return std::nullopt;
}

std::pair<Integer, Integer> goldbach_pair(const Integer& n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("Goldbach pairs are defined for even n >= 4");

    for (std::uint64_t p : small_primes()) {
        if (Integer(p) * 2 > n)
            break;
        if (is_prime(n - p).passed())
            return {Integer(p), n - p};
    }
    // The smallest partner prime is tiny for every feasible n; scanning past
    // 10^6 only keeps the search correct for adversarial inputs.
    std::uint64_t sieve_bound = 10'000'000;
    while (Integer(sieve_bound) / 10 * 2 <= n && sieve_bound <= 100'000'000) {
        for (std::uint64_t p : primes_up_to(sieve_bound)) {
            if (p <= sieve_bound / 10)
                continue;
            if (Integer(p) * 2 > n)
                break;
            if (is_prime(n - p).passed())
                return {Integer(p), n - p};
        }
        sieve_bound *= 10;
    }
    throw computation_error("no Goldbach pair found for " + n.str());
}

std::array<Integer, 3> three_prime_decomposition(const Integer& n) {
    if (n <= 5 || n % 2 == 0)
        throw std::invalid_argument("three-prime decompositions are defined for odd n > 5");
    // Smallest odd prime leaving an even remainder >= 4; n > 5 makes that 3.
    const Integer first = 3;
    auto [q, r] = goldbach_pair(n - first);
    std::array<Integer, 3> parts{first, q, r};
    std::sort(parts.begin(), parts.end());
    return parts;
}

PLengthReport plength_upper(const Integer& n, const PLengthCaps& caps) {
    if (n == 0)
        throw std::invalid_argument("0 has no positive word length");

    PLengthReport report;
    report.n = n;
    report.two_power_cap = caps.two_power_cap;

    if (auto w1 = length1_witness(n)) {
        report.upper_bound = 1;
        report.witness = {*w1};
    } else if (auto w2 = length2_witness(n, caps.two_power_cap)) {
        report.upper_bound = 2;
        report.witness = {w2->first, w2->second};
    } else {
        const bool negative = n < 0;
        const Integer m = abs_integer(n);
        std::vector<SignedPrimePower> terms;
        if (m % 2 != 0) {
            // Odd and not expressible with fewer terms, so m > 5.
            for (const Integer& p : three_prime_decomposition(m))
                terms.push_back(prime_term(p));
            report.upper_bound = 3;
        } else {
            try {
                // Even three-term form 2 + (Goldbach pair of m - 2).
                auto [p, q] = goldbach_pair(m - 2);
                terms = {prime_term(2), prime_term(p), prime_term(q)};
                report.upper_bound = 3;
            } catch (const computation_error&) {
                // One more than an odd integer: 1 + three primes.
                for (const Integer& p : three_prime_decomposition(m - 1))
                    terms.push_back(prime_term(p));
                terms.push_back(make_term(false, PrimePower::unit()));
                report.upper_bound = 4;
            }
        }
        report.witness = negative ? negate_all(std::move(terms)) : std::move(terms);
        report.candidate = true;
    }

    if (report.witness_sum() != n)
        throw std::logic_error("plength witness does not sum to its target");
    return report;
}

namespace {

bool is_excluded(const Integer& p, const std::vector<Integer>& excluded) {
    return std::find(excluded.begin(), excluded.end(), p) != excluded.end();
}

// Smallest-p Goldbach-style pair for even m >= 4 avoiding excluded primes.
std::pair<Integer, Integer> filtered_goldbach(const Integer& m,
                                              const std::vector<Integer>& excluded) {
    for (std::uint64_t p : small_primes()) {
        if (Integer(p) * 2 > m)
            break;
        if (is_excluded(Integer(p), excluded))
            continue;
        const Integer q = m - p;
        if (!is_excluded(q, excluded) && is_prime(q).passed())
            return {Integer(p), q};
    }
    throw computation_error("no two-prime decomposition of " + m.str() +
                            " avoiding the excluded primes");
}

// Decomposition of v >= 1 over signed prime powers whose bases avoid the
// excluded primes. Exact BFS at small scale; beyond it, two-term searches,
// then the three-prime route for odd values and a filtered pair for even.
std::vector<SignedPrimePower> decompose_avoiding(const Integer& v,
                                                 const std::vector<Integer>& excluded,
                                                 const PLengthCaps& caps) {
    const auto allowed = [&](const SignedPrimePower& t) {
        return t.pp.is_unit() || !is_excluded(t.pp.base, excluded);
    };

    if (auto pp = is_prime_power(v); pp && (pp->is_unit() || !is_excluded(pp->base, excluded)))
        return {make_term(false, *pp)};

    if (v <= kBfsReplacementBound) {
        const std::int64_t target = to_int64(v);
        std::vector<std::int64_t> allowed_primes;
        for (std::uint64_t p : small_primes()) {
            if (p > static_cast<std::uint64_t>(4 * target + 16))
                break;
            if (!is_excluded(Integer(p), excluded))
                allowed_primes.push_back(static_cast<std::int64_t>(p));
        }
        if (!allowed_primes.empty()) {
            const auto descriptor = GeneratingSetDescriptor::prime_list(std::move(allowed_primes));
            std::vector<SignedPrimePower> terms;
            for (const Integer& step : shortest_decomposition(descriptor, target)) {
                auto pp = is_prime_power(abs_integer(step));
                if (!pp)
                    throw std::logic_error("BFS generator is not a prime power");
                terms.push_back(make_term(step < 0, *pp));
            }
            return terms;
        }
    }

    // Two-term forms with a power of two, then over a table of small odd
    // prime powers.
    if (auto w2 = length2_witness(v, caps.two_power_cap))
        if (allowed(w2->first) && allowed(w2->second))
            return {w2->first, w2->second};
    for (std::int64_t a = 3; a <= kDifferenceScanBound; a += 2) {
        const auto small = positive_pp_term(Integer(a));
        if (!small || !allowed(*small))
            continue;
        const Integer below = v - a;
        if (below >= 1) {
            if (auto big = positive_pp_term(below); big && allowed(*big))
                return {*big, *small};
        }
        if (auto big = positive_pp_term(v + a); big && allowed(*big))
            return {*big, make_term(true, small->pp)};
    }

    std::vector<SignedPrimePower> terms;
    if (v % 2 != 0) {
        // Smallest allowed odd prime whose removal leaves an even value >= 4.
        Integer first = 0;
        for (std::uint64_t p : small_primes()) {
            if (p == 2 || is_excluded(Integer(p), excluded))
                continue;
            if (v - p >= 4) {
                first = p;
                break;
            }
        }
        if (first == 0)
            throw computation_error("no usable first prime for " + v.str());
        auto [q, r] = filtered_goldbach(v - first, excluded);
        terms = {prime_term(first), prime_term(q), prime_term(r)};
    } else {
        auto [p, q] = filtered_goldbach(v, excluded);
        terms = {prime_term(p), prime_term(q)};
    }
    return terms;
}

}  // namespace

RestrictedLengthReport restricted_prime_length(const Integer& n,
                                               const std::vector<Integer>& excluded,
                                               const PLengthCaps& caps) {
    RestrictedLengthReport out;
    out.n = n;
    out.excluded = excluded;
    std::sort(out.excluded.begin(), out.excluded.end());
    out.excluded.erase(std::unique(out.excluded.begin(), out.excluded.end()), out.excluded.end());

    const PLengthReport base = plength_upper(n, caps);
    for (const auto& term : base.witness) {
        if (term.pp.is_unit() || !is_excluded(term.pp.base, out.excluded)) {
            out.witness.push_back(term);
            continue;
        }
        auto replacement = decompose_avoiding(term.pp.value(), out.excluded, caps);
        if (term.negative)
            replacement = negate_all(std::move(replacement));
        out.witness.insert(out.witness.end(), replacement.begin(), replacement.end());
    }
    out.upper_bound = static_cast<int>(out.witness.size());

    Integer sum = 0;
    for (const auto& t : out.witness)
        sum += t.value();
    if (sum != n)
        throw std::logic_error("restricted witness does not sum to its target");
    return out;
}

}  // namespace gadic
