#include "gadic/primality.hpp"

#include <array>
#include <cstdint>

#include "gadic/prime_power.hpp"
#include "gadic/prime_sieve.hpp"

namespace gadic {

namespace {

// Exhaustive witness set for n < 3.3 * 10^24 (covers the whole 64-bit range).
constexpr std::array<std::uint64_t, 12> kDeterministicBases = {2,  3,  5,  7,  11, 13,
                                                               17, 19, 23, 29, 31, 37};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1;
    base %= m;
    while (exp) {
        if (exp & 1)
            acc = mulmod(acc, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

bool miller_rabin_round_u64(std::uint64_t n, std::uint64_t a) {
    a %= n;
    if (a == 0)
        return true;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                            31ull, 37ull, 41ull, 43ull, 47ull}) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    for (std::uint64_t a : kDeterministicBases)
        if (!miller_rabin_round_u64(n, a))
            return false;
    return true;
}

Integer mod_n(Integer x, const Integer& n) {
    x %= n;
    if (x < 0)
        x += n;
    return x;
}

bool miller_rabin_round(const Integer& n, const Integer& a) {
    const Integer nm1 = n - 1;
    const unsigned s = boost::multiprecision::lsb(nm1);
    const Integer d = nm1 >> s;
    Integer x = boost::multiprecision::powm(mod_n(a, n), d, n);
    if (x == 1 || x == nm1)
        return true;
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == nm1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

// Jacobi symbol (a/n) for odd positive n.
int jacobi(Integer a, Integer n) {
    a = mod_n(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a >>= 1;
            const std::int64_t r = static_cast<std::int64_t>(n % 8);
            if (r == 3 || r == 5)
                result = -result;
        }
        a.swap(n);
        if (a % 4 == 3 && n % 4 == 3)
            result = -result;
        a = mod_n(a, n);
    }
    return n == 1 ? result : 0;
}

// Strong Lucas probable-prime test with Selfridge parameters (P = 1,
// Q = (1 - D)/4 for the first D in 5, -7, 9, -11, ... with (D/n) = -1).
// Callers must have ruled out perfect squares and small factors.
bool strong_lucas_round(const Integer& n) {
    Integer d_abs = 5;
    int sign = 1;
    Integer D;
    while (true) {
        D = sign > 0 ? d_abs : -d_abs;
        const int j = jacobi(D, n);
        if (j == -1)
            break;
        if (j == 0)
            return false;  // shares a factor with the small |D|
        d_abs += 2;
        sign = -sign;
    }
    const Integer Q = (1 - D) / 4;

    Integer d = n + 1;
    unsigned s = boost::multiprecision::lsb(d);
    d >>= s;

    const auto halve = [&n](Integer x) {
        x = mod_n(std::move(x), n);
        if (x % 2 != 0)
            x += n;
        return mod_n(x >> 1, n);
    };

    // Binary ladder for (U_d, V_d) with P = 1.
    Integer u = 1, v = 1, qk = mod_n(Q, n);
    const unsigned top = boost::multiprecision::msb(d);
    for (unsigned i = top; i-- > 0;) {
        u = u * v % n;
        v = mod_n(v * v - 2 * qk, n);
        qk = qk * qk % n;
        if (boost::multiprecision::bit_test(d, i)) {
            const Integer u_next = halve(u + v);
            const Integer v_next = halve(D * u + v);
            u = u_next;
            v = v_next;
            qk = mod_n(qk * Q, n);
        }
    }

    if (u == 0 || v == 0)
        return true;
    for (unsigned r = 1; r < s; ++r) {
        v = mod_n(v * v - 2 * qk, n);
        if (v == 0)
            return true;
        qk = qk * qk % n;
    }
    return false;
}

const std::vector<std::uint64_t>& extra_round_bases() {
    // Fixed ascending prime bases keep repeated runs byte-identical.
    static const std::vector<std::uint64_t> bases = primes_up_to(10000);
    return bases;
}

}  // namespace

const Integer& deterministic_primality_bound() {
    static const Integer bound = Integer(1) << 64;
    return bound;
}

PrimalityVerdict is_prime(const Integer& n, const PrimalityOptions& options) {
    if (n < 0)
        throw std::invalid_argument("primality is defined for n >= 0");

    PrimalityVerdict verdict;
    if (n < 2) {
        verdict.status = PrimalityVerdict::Status::composite;
        verdict.note = "n < 2";
        return verdict;
    }

    if (n < deterministic_primality_bound()) {
        const bool prime = is_prime_u64(static_cast<std::uint64_t>(n));
        verdict.status = prime ? PrimalityVerdict::Status::prime : PrimalityVerdict::Status::composite;
        verdict.note = "deterministic Miller-Rabin witness set (n < 2^64)";
        return verdict;
    }

    verdict.note = "Baillie-PSW + " + std::to_string(options.extra_rounds) + " strong rounds";

    // Trial division by small primes.
    static const std::vector<std::uint64_t> small_primes = primes_up_to(1 << 16);
    for (std::uint64_t p : small_primes) {
        if (n % p == 0) {
            verdict.status = PrimalityVerdict::Status::composite;
            return verdict;
        }
    }

    if (!miller_rabin_round(n, 2)) {
        verdict.status = PrimalityVerdict::Status::composite;
        return verdict;
    }

    // A perfect square can never produce (D/n) = -1; settle it now.
    const Integer root = integer_kth_root(n, 2);
    if (root * root == n) {
        verdict.status = PrimalityVerdict::Status::composite;
        return verdict;
    }

    if (!strong_lucas_round(n)) {
        verdict.status = PrimalityVerdict::Status::composite;
        return verdict;
    }

    const auto& bases = extra_round_bases();
    for (int i = 0; i < options.extra_rounds && i < static_cast<int>(bases.size()); ++i) {
        if (!miller_rabin_round(n, Integer(bases[static_cast<std::size_t>(i)]))) {
            verdict.status = PrimalityVerdict::Status::composite;
            return verdict;
        }
    }

    verdict.status = PrimalityVerdict::Status::probable_prime;
    return verdict;
}

}  // namespace gadic
