#include "gadic/lambda.hpp"

#include <stdexcept>
#include <string>

namespace gadic {

namespace {

void require_args(std::int64_t g, std::int64_t k) {
    if (g < 2)
        throw std::invalid_argument("base must be >= 2, got " + std::to_string(g));
    if (k < 1)
        throw std::invalid_argument("length must be >= 1, got " + std::to_string(k));
}

}  // namespace

LambdaParams lambda_params(std::int64_t g, std::int64_t k) {
    require_args(g, k);
    LambdaParams p;
    p.g = g;
    p.k = k;
    if (g % 2 != 0) {
        p.b = (g - 1) / 2;
        p.q = 2 * k / (g - 1);
        p.r = k % p.b;
        if (p.r == 0) {
            p.A = p.b;
            p.B = 0;
        } else {
            p.A = -p.b;
            p.B = p.r;
        }
    } else {
        p.b = g / 2;
        p.r = k % (g - 1);
        p.q = k / (g - 1) - (p.r == 0 ? 1 : 0);
        if (p.r == 0) {
            p.A = p.b;
            p.B = p.b - 1;
        } else if (p.r > p.b) {
            p.A = p.b;
            p.B = p.r - p.b;
        } else {
            p.A = p.r;
            p.B = 0;
        }
    }
    return p;
}

Integer lambda(std::int64_t g, std::int64_t k) {
    const LambdaParams p = lambda_params(g, k);
    Integer value;
    if (g % 2 != 0) {
        // (1 - g^(q-1))/2 + A*g^(q-1) + B*g^q, with the q = 0 case collapsing
        // to the single digit r = k (no negative powers appear: the two
        // g^(q-1) terms cancel exactly).
        if (p.q == 0) {
            value = p.r;
        } else {
            const Integer gq1 = integer_pow(Integer(g), static_cast<unsigned>(p.q - 1));
            value = (1 - gq1) / 2 + p.A * gq1 + p.B * gq1 * g;
        }
    } else {
        // g*(1 - g^(2q))/(2*(1+g)) + A*g^(2q) + B*g^(2q+1). The leading term
        // is an exact integer: g+1 divides g^(2q) - 1, and g is even.
        const Integer g2q = integer_pow(Integer(g), static_cast<unsigned>(2 * p.q));
        value = -(g / 2) * ((g2q - 1) / (g + 1)) + p.A * g2q + p.B * g2q * g;
    }

    if (g_length(value, g) != k)
        throw std::logic_error("lambda self-check failed for g=" + std::to_string(g) +
                               ", k=" + std::to_string(k));
    return value;
}

GAdicExpansion lambda_digits(std::int64_t g, std::int64_t k) {
    const LambdaParams p = lambda_params(g, k);
    GAdicExpansion e;
    e.base = g;
    if (g % 2 != 0) {
        if (p.r == 0) {
            e.digits.assign(static_cast<std::size_t>(p.q), -p.b);
            e.digits.back() = p.b;
        } else {
            e.digits.assign(static_cast<std::size_t>(p.q + 1), -p.b);
            e.digits.back() = p.r;
        }
    } else {
        for (std::int64_t i = 0; i < p.q; ++i) {
            e.digits.push_back(-p.b);
            e.digits.push_back(-(p.b - 1));
        }
        if (p.r == 0) {
            e.digits.push_back(p.b);
            e.digits.push_back(p.b - 1);
        } else if (p.r > p.b) {
            e.digits.push_back(p.b);
            e.digits.push_back(p.r - p.b);
        } else {
            e.digits.push_back(p.r);
        }
        while (!e.digits.empty() && e.digits.back() == 0)
            e.digits.pop_back();
    }
    e.value = expansion_value(g, e.digits);
    return e;
}

}  // namespace gadic
