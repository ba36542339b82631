#include "gadic/sun.hpp"

#include "gadic/factorization.hpp"
#include "gadic/prime_power.hpp"

namespace gadic {

namespace {

const char* const kExpectedSum = "133014037665409087128068994259";

const std::map<Integer, unsigned>& expected_factors() {
    static const std::map<Integer, unsigned> factors{
        {Integer(23), 1},
        {Integer(299723), 1},
        {Integer("19295212676140402555471"), 1},
    };
    return factors;
}

std::string factor_string(const std::map<Integer, unsigned>& factors) {
    std::string out;
    for (const auto& [p, e] : factors) {
        if (!out.empty())
            out += " * ";
        out += p.str();
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace

const Integer& SunConstants::M() {
    static const Integer m("47867742232066880047611079");
    return m;
}

const Integer& SunConstants::N() {
    static const Integer n("66483084961588510124010691590");
    return n;
}

bool sun_class_member(const Integer& x) {
    Integer r = (x - SunConstants::M()) % SunConstants::N();
    return r == 0;
}

bool SunVerification::all_passed() const {
    for (const auto& check : checks)
        if (!check.passed)
            return false;
    return !checks.empty();
}

SunVerification verify_sun_example(const PrimalityOptions& options) {
    SunVerification v;
    const Integer& m = SunConstants::M();
    const Integer& n = SunConstants::N();

    {
        const PrimalityVerdict vm = is_prime(m, options);
        const PrimalityVerdict vmn = is_prime(m + n, options);
        v.checks.push_back({"M and M+N probable prime", vm.passed() && vmn.passed(),
                            "M: " + vm.note + "; M+N: " + vmn.note});
    }

    const Integer sum = m + 2 * n;
    v.checks.push_back({"M+2N matches its known decimal value", sum == Integer(kExpectedSum),
                        "computed " + sum.str()});

    {
        const auto factors = factor(sum);
        v.checks.push_back({"M+2N factorization reproduced", factors == expected_factors(),
                            "computed " + factor_string(factors)});
    }

    v.checks.push_back({"M+2N is not a prime power", !is_prime_power(sum).has_value(),
                        "largest-exponent-first probe"});
    return v;
}

}  // namespace gadic
