#pragma once

#include <string>

#include "gadic/integer.hpp"

namespace gadic {

/// Outcome of a primality test. "prime" is only ever claimed below the
/// deterministic boundary (2^64, where a fixed Miller-Rabin witness set is
/// exhaustive); above it the strongest positive answer is "probable_prime"
/// from a Baillie-PSW test plus extra strong rounds, and the note records
/// the configuration that produced the verdict.
struct PrimalityVerdict {
    enum class Status { composite, prime, probable_prime };

    Status status = Status::composite;
    std::string note;

    bool passed() const { return status != Status::composite; }
};

struct PrimalityOptions {
    int extra_rounds = 64;  // strong rounds on top of Baillie-PSW above 2^64
};

/// First n for which verdicts become probabilistic.
const Integer& deterministic_primality_bound();

/// Primality test for n >= 0 (0 and 1 report composite).
PrimalityVerdict is_prime(const Integer& n, const PrimalityOptions& options = {});

}  // namespace gadic
