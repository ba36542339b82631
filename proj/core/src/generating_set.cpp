#include "gadic/generating_set.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gadic/prime_sieve.hpp"

namespace gadic {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

}  // namespace

GeneratingSetDescriptor GeneratingSetDescriptor::single(std::int64_t g) {
    if (g < 2)
        throw std::invalid_argument("generating-set base must be >= 2");
    GeneratingSetDescriptor d;
    d.kind = Kind::single_base;
    d.base = g;
    return d;
}

GeneratingSetDescriptor GeneratingSetDescriptor::prime_list(std::vector<std::int64_t> primes) {
    if (primes.empty())
        throw std::invalid_argument("prime-set descriptor needs at least one prime");
    for (std::int64_t p : primes)
        if (p < 2)
            throw std::invalid_argument("prime-set entries must be >= 2");
    GeneratingSetDescriptor d;
    d.kind = Kind::prime_set;
    d.primes = std::move(primes);
    std::sort(d.primes.begin(), d.primes.end());
    d.primes.erase(std::unique(d.primes.begin(), d.primes.end()), d.primes.end());
    return d;
}

GeneratingSetDescriptor GeneratingSetDescriptor::every_prime() {
    GeneratingSetDescriptor d;
    d.kind = Kind::prime_set;
    d.all_primes = true;
    return d;
}

GeneratingSetDescriptor GeneratingSetDescriptor::list(std::vector<Integer> elements) {
    if (elements.empty())
        throw std::invalid_argument("explicit generating set must not be empty");
    for (const Integer& e : elements)
        if (e < 1)
            throw std::invalid_argument("explicit generators must be positive");
    GeneratingSetDescriptor d;
    d.kind = Kind::explicit_list;
    d.elements = std::move(elements);
    std::sort(d.elements.begin(), d.elements.end());
    d.elements.erase(std::unique(d.elements.begin(), d.elements.end()), d.elements.end());
    return d;
}

GeneratingSetDescriptor GeneratingSetDescriptor::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("generating-set descriptor must look like 'g:5', "
                                    "'primes:all', 'primes:2,3,7' or 'list:1,2,9'; got '" +
                                    text + "'");
    const std::string head = text.substr(0, colon);
    const std::string tail = text.substr(colon + 1);
    if (head == "g") {
        return single(to_int64(parse_integer(tail)));
    }
    if (head == "primes") {
        if (tail == "all")
            return every_prime();
        std::vector<std::int64_t> primes;
        for (const std::string& part : split(tail, ','))
            primes.push_back(to_int64(parse_integer(part)));
        return prime_list(std::move(primes));
    }
    if (head == "list") {
        std::vector<Integer> elements;
        for (const std::string& part : split(tail, ','))
            elements.push_back(parse_integer(part));
        return list(std::move(elements));
    }
    throw std::invalid_argument("unknown generating-set kind '" + head + "'");
}

std::string GeneratingSetDescriptor::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::single_base:
            out << "g:" << base;
            break;
        case Kind::prime_set:
            if (all_primes) {
                out << "primes:all";
            } else {
                out << "primes:";
                for (std::size_t i = 0; i < primes.size(); ++i)
                    out << (i ? "," : "") << primes[i];
            }
            break;
        case Kind::explicit_list:
            out << "list:";
            for (std::size_t i = 0; i < elements.size(); ++i)
                out << (i ? "," : "") << elements[i];
            break;
    }
    return out.str();
}

std::vector<Integer> enumerate_generators(const GeneratingSetDescriptor& s,
                                          const Integer& magnitude_bound) {
    if (magnitude_bound < 1)
        throw std::invalid_argument("magnitude bound must be >= 1");

    std::set<Integer> out;
    const auto add_powers_of = [&](std::int64_t base) {
        for (Integer p = 1; p <= magnitude_bound; p *= base)
            out.insert(p);
    };

    switch (s.kind) {
        case GeneratingSetDescriptor::Kind::single_base:
            add_powers_of(s.base);
            break;
        case GeneratingSetDescriptor::Kind::prime_set:
            if (s.all_primes) {
                if (magnitude_bound > Integer(1) << 40)
                    throw std::invalid_argument("refusing to enumerate all prime powers above 2^40");
                out.insert(1);
                if (magnitude_bound >= 2)
                    for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(magnitude_bound)))
                        add_powers_of(static_cast<std::int64_t>(p));
            } else {
                if (s.primes.empty())
                    throw std::invalid_argument("empty prime-set descriptor");
                for (std::int64_t p : s.primes)
                    add_powers_of(p);
            }
            break;
        case GeneratingSetDescriptor::Kind::explicit_list:
            if (s.elements.empty())
                throw std::invalid_argument("empty explicit generating set");
            for (const Integer& e : s.elements)
                if (e <= magnitude_bound)
                    out.insert(e);
            break;
    }
    return std::vector<Integer>(out.begin(), out.end());
}

}  // namespace gadic
