#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gadic/generating_set.hpp"
#include "gadic/integer.hpp"

namespace gadic {

/// Word-metric distances from 0 for every integer in a window, measured on
/// the Cayley graph of (Z, S). Produced by breadth-first search over the
/// restricted state space |x| <= margin * max(|lo|, |hi|); a geodesic of the
/// infinite graph can in principle leave any finite box, so distances are
/// exact for the restricted graph and validated elsewhere by margin doubling
/// and by agreement with closed forms.
struct LengthTable {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    int margin = 4;
    std::vector<std::int32_t> lengths;  // indexed by n - lo

    std::int32_t at(std::int64_t n) const { return lengths[static_cast<std::size_t>(n - lo)]; }
    bool contains(std::int64_t n) const { return n >= lo && n <= hi; }
};

/// BFS word lengths for every integer in [lo, hi]. Requires lo <= 0 <= hi and
/// margin >= 1. Throws computation_error if some point of the window is not
/// reached within the exploration box (margin too small, or the described
/// set does not generate it).
LengthTable bfs_lengths(const GeneratingSetDescriptor& s, std::int64_t lo, std::int64_t hi,
                        int margin = 4);

/// Smallest positive n <= search_bound whose BFS word length is exactly k,
/// or nullopt if there is none in range.
std::optional<Integer> oracle_lambda(const GeneratingSetDescriptor& s, std::int64_t k,
                                     std::int64_t search_bound, int margin = 4);

/// One shortest signed-generator decomposition of target (empty for 0):
/// the returned terms sum to target and their count is the word length.
std::vector<Integer> shortest_decomposition(const GeneratingSetDescriptor& s, std::int64_t target,
                                            int margin = 4);

}  // namespace gadic
