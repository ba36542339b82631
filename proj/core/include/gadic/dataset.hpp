#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gadic/integer.hpp"

namespace gadic {

/// Layout of a lambda table: one row per length k, one column per base.
/// Defaults reproduce the reference table (primes below 30, k up to 20).
struct TableSpec {
    enum class Format { csv, json, text };

    std::vector<std::int64_t> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    std::int64_t k_max = 20;
    Format format = Format::text;
};

/// Renders lambda_g(k) for every base column and k = 1..k_max.
/// csv: header "k,<bases...>", LF line endings, no quoting.
/// json: {"bases": [...], "k_max": n, "values": [[row-major strings]]}
///       (values as decimal strings so arbitrary-size entries stay exact).
/// text: right-aligned columns, fixed per run of inputs; byte-stable.
std::string emit_lambda_table(const TableSpec& spec);

/// CSV "g,length" rows: the g-length of a fixed n across bases
/// g_lo..g_hi. Requires n != 0 and 2 <= g_lo <= g_hi.
std::string emit_length_vs_g(const Integer& n, std::int64_t g_lo, std::int64_t g_hi);

/// CSV "series,x,y": rows ("length", n, l_g(n)) for n = 1..n_max followed by
/// the overlay ("lambda", k, lambda_g(k)) for every k with lambda_g(k) <= n_max.
std::string emit_length_histogram(std::int64_t g, std::int64_t n_max);

/// OEIS-style b-file: "k lambda_g(k)" per line for k = 1..count.
std::string emit_bfile(std::int64_t g, std::int64_t count);

/// Parses b-file text back into (index, value) records; used by round-trip
/// checks. Lines must be "<index> <value>".
std::vector<std::pair<std::int64_t, Integer>> parse_bfile(const std::string& text);

}  // namespace gadic
