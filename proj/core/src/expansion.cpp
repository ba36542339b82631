#include "gadic/expansion.hpp"

#include <sstream>
#include <stdexcept>

namespace gadic {

namespace {

void require_base(std::int64_t g) {
    if (g < 2)
        throw std::invalid_argument("base must be >= 2, got " + std::to_string(g));
}

// Residue of n mod g in [0, g).
std::int64_t nonneg_mod(const Integer& n, std::int64_t g) {
    Integer r = n % g;
    if (r < 0)
        r += g;
    return static_cast<std::int64_t>(r);
}

// Digit choice for even g when n = g/2 (mod g). Both signs of g/2 leave an
// integer remainder; only one of them lets the following digit satisfy
// |next| < g/2 with a compatible sign. Taking +g/2 leaves m = (n - g/2)/g,
// whose balanced digit is nonnegative and below g/2 exactly when
// m mod g < g/2; otherwise -g/2 is the consistent choice.
std::int64_t tie_digit(const Integer& n, std::int64_t g) {
    const std::int64_t half = g / 2;
    Integer m = (n - half) / g;
    return nonneg_mod(m, g) < half ? half : -half;
}

}  // namespace

Integer GAdicExpansion::length() const {
    Integer sum = 0;
    for (std::int64_t d : digits)
        sum += d < 0 ? -d : d;
    return sum;
}

std::string GAdicExpansion::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i)
            out << ", ";
        out << digits[i];
    }
    out << ']';
    return out.str();
}

Integer expansion_value(std::int64_t base, const std::vector<std::int64_t>& digits) {
    Integer acc = 0;
    for (std::size_t i = digits.size(); i-- > 0;)
        acc = acc * base + digits[i];
    return acc;
}

GAdicExpansion expand(const Integer& n, std::int64_t g) {
    require_base(g);
    GAdicExpansion e;
    e.base = g;
    e.value = n;

    const bool even = (g % 2 == 0);
    const std::int64_t half = even ? g / 2 : (g - 1) / 2;

    Integer rest = n;
    while (rest != 0) {
        std::int64_t r = nonneg_mod(rest, g);
        std::int64_t d;
        if (r < half || (!even && r == half))
            d = r;
        else if (r > half)
            d = r - g;
        else
            d = tie_digit(rest, g);
        e.digits.push_back(d);
        rest = (rest - d) / g;
    }
    return e;
}

Integer g_length(const Integer& n, std::int64_t g) {
    return expand(n, g).length();
}

std::strong_ordering compare_by_digits(const GAdicExpansion& a, const GAdicExpansion& b) {
    if (a.base != b.base)
        throw std::invalid_argument("cannot compare expansions over different bases");
    const std::size_t top = std::max(a.digits.size(), b.digits.size());
    for (std::size_t i = top; i-- > 0;) {
        const std::int64_t da = i < a.digits.size() ? a.digits[i] : 0;
        const std::int64_t db = i < b.digits.size() ? b.digits[i] : 0;
        if (da != db)
            return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering compare_by_digits(const Integer& m, const Integer& n, std::int64_t g) {
    require_base(g);
    return compare_by_digits(expand(m, g), expand(n, g));
}

std::vector<std::string> validate(const GAdicExpansion& e) {
    std::vector<std::string> violations;
    if (e.base < 2) {
        violations.push_back("base must be >= 2");
        return violations;
    }
    const bool even = (e.base % 2 == 0);
    const std::int64_t half = even ? e.base / 2 : (e.base - 1) / 2;

    if (!e.digits.empty() && e.digits.back() == 0)
        violations.push_back("leading digit is zero");

    for (std::size_t i = 0; i < e.digits.size(); ++i) {
        const std::int64_t d = e.digits[i];
        const std::int64_t mag = d < 0 ? -d : d;
        if (mag > half) {
            violations.push_back("digit " + std::to_string(d) + " at index " + std::to_string(i) +
                                 " exceeds magnitude bound " + std::to_string(half));
            continue;
        }
        if (even && mag == half) {
            const std::int64_t next = i + 1 < e.digits.size() ? e.digits[i + 1] : 0;
            const std::int64_t next_mag = next < 0 ? -next : next;
            if (next_mag >= half)
                violations.push_back("digit of magnitude " + std::to_string(half) + " at index " +
                                     std::to_string(i) + " is followed by magnitude " +
                                     std::to_string(next_mag));
            else if (d > 0 ? next < 0 : next > 0)
                violations.push_back("digit of magnitude " + std::to_string(half) + " at index " +
                                     std::to_string(i) + " is followed by an opposite-sign digit");
        }
    }

    if (expansion_value(e.base, e.digits) != e.value)
        violations.push_back("cached value does not match the digit sum");
    return violations;
}

}  // namespace gadic
