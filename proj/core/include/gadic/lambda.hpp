#pragma once

#include <cstdint>

#include "gadic/expansion.hpp"
#include "gadic/integer.hpp"

namespace gadic {

/// Case-split constants behind the closed form for lambda_g(k), the smallest
/// positive integer of g-length exactly k.
///
/// Odd g, with b = (g-1)/2:
///   q = floor(2k / (g-1)), r = k mod b, so k = q*b + r;
///   A = b and B = 0 when r = 0, otherwise A = -b and B = r;
///   lambda_g(k) = (1 - g^(q-1))/2 + A*g^(q-1) + B*g^q.
///
/// Even g, with b = g/2 and r = k mod (g-1):
///   q = floor(k/(g-1)) - 1 when r = 0, else floor(k/(g-1));
///   A = b when r = 0 or r > b, else r;
///   B = b-1 when r = 0, r-b when r > b, else 0;
///   lambda_g(k) = g*(1 - g^(2q)) / (2*(1+g)) + A*g^(2q) + B*g^(2q+1).
struct LambdaParams {
    std::int64_t g = 0;
    std::int64_t k = 0;
    std::int64_t b = 0;  // digit-magnitude bound: (g-1)/2 odd, g/2 even
    std::int64_t q = 0;
    std::int64_t r = 0;
    std::int64_t A = 0;
    std::int64_t B = 0;
};

/// Derives the case-split constants. Requires g >= 2, k >= 1.
LambdaParams lambda_params(std::int64_t g, std::int64_t k);

/// Smallest positive integer whose g-length is exactly k, by the closed
/// forms above. Self-checks the result through g_length before returning.
Integer lambda(std::int64_t g, std::int64_t k);

/// The explicit digit pattern of lambda(g, k):
///   odd g:  [-b, ..., -b, b] (q digits) when r = 0, else [-b, ..., -b, r]
///           (q+1 digits);
///   even g: q leading pairs (-b, -(b-1)) followed by (b, b-1) when r = 0,
///           (b, r-b) when r > b, or the single digit r otherwise,
///           normalized to drop a trailing zero (b-1 = 0 when g = 2).
/// Always equals expand(lambda(g, k), g).
GAdicExpansion lambda_digits(std::int64_t g, std::int64_t k);

}  // namespace gadic
