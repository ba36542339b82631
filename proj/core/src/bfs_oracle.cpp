#include "gadic/bfs_oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gadic/errors.hpp"

namespace gadic {

namespace {

constexpr std::int64_t kMaxStates = 1 << 28;  // dense visited array; ~1 GiB of int32

struct Exploration {
    std::int64_t bound = 0;                // states are |x| <= bound
    std::vector<std::int32_t> dist;        // indexed by x + bound; -1 = unreached
    std::vector<std::int64_t> generators;  // positive generators <= bound

    std::int32_t& dist_at(std::int64_t x) { return dist[static_cast<std::size_t>(x + bound)]; }
};

// Level-synchronous BFS from 0 over the box |x| <= bound.
Exploration explore(const GeneratingSetDescriptor& s, std::int64_t bound) {
    Exploration ex;
    ex.bound = bound;
    if (2 * bound + 1 > kMaxStates)
        throw std::invalid_argument("BFS exploration box too large: " + std::to_string(bound));

    for (const Integer& gen : enumerate_generators(s, bound))
        ex.generators.push_back(to_int64(gen));

    ex.dist.assign(static_cast<std::size_t>(2 * bound + 1), -1);
    ex.dist_at(0) = 0;

    std::vector<std::int64_t> frontier{0};
    std::vector<std::int64_t> next;
    std::int32_t level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (std::int64_t x : frontier) {
            for (std::int64_t gen : ex.generators) {
                for (std::int64_t y : {x + gen, x - gen}) {
                    if (y < -bound || y > bound)
                        continue;
                    std::int32_t& d = ex.dist_at(y);
                    if (d < 0) {
                        d = level;
                        next.push_back(y);
                    }
                }
            }
        }
        frontier.swap(next);
    }
    return ex;
}

std::int64_t exploration_bound(std::int64_t lo, std::int64_t hi, int margin) {
    return margin * std::max({std::int64_t{1}, -lo, hi});
}

void require_window(std::int64_t lo, std::int64_t hi, int margin) {
    if (lo > 0 || hi < 0)
        throw std::invalid_argument("window must contain 0");
    if (margin < 1)
        throw std::invalid_argument("margin must be >= 1");
}

}  // namespace

LengthTable bfs_lengths(const GeneratingSetDescriptor& s, std::int64_t lo, std::int64_t hi,
                        int margin) {
    require_window(lo, hi, margin);
    Exploration ex = explore(s, exploration_bound(lo, hi, margin));

    LengthTable table;
    table.lo = lo;
    table.hi = hi;
    table.margin = margin;
    table.lengths.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t n = lo; n <= hi; ++n) {
        std::int32_t d = ex.dist_at(n);
        if (d < 0)
            throw computation_error("BFS did not reach " + std::to_string(n) +
                                    " within margin " + std::to_string(margin) +
                                    "; the set may not generate it, or the margin is too small");
        table.lengths.push_back(d);
    }
    return table;
}

std::optional<Integer> oracle_lambda(const GeneratingSetDescriptor& s, std::int64_t k,
                                     std::int64_t search_bound, int margin) {
    if (k < 1)
        throw std::invalid_argument("length must be >= 1");
    if (search_bound < 1)
        throw std::invalid_argument("search bound must be >= 1");
    LengthTable table = bfs_lengths(s, 0, search_bound, margin);
    for (std::int64_t n = 1; n <= search_bound; ++n)
        if (table.at(n) == k)
            return Integer(n);
    return std::nullopt;
}

std::vector<Integer> shortest_decomposition(const GeneratingSetDescriptor& s, std::int64_t target,
                                            int margin) {
    if (target == 0)
        return {};
    const std::int64_t radius = target < 0 ? -target : target;
    Exploration ex = explore(s, exploration_bound(-radius, radius, margin));
    if (ex.dist_at(target) < 0)
        throw computation_error("no decomposition of " + std::to_string(target) +
                                " found within margin " + std::to_string(margin));

    // Walk back from the target: each step moves to a predecessor one level
    // closer to 0, recording the signed generator that was applied.
    std::vector<Integer> terms;
    std::int64_t x = target;
    while (x != 0) {
        const std::int32_t d = ex.dist_at(x);
        bool stepped = false;
        for (std::int64_t gen : ex.generators) {
            for (std::int64_t signed_gen : {gen, -gen}) {
                const std::int64_t prev = x - signed_gen;
                if (prev >= -ex.bound && prev <= ex.bound && ex.dist_at(prev) == d - 1) {
                    terms.push_back(signed_gen);
                    x = prev;
                    stepped = true;
                    break;
                }
            }
            if (stepped)
                break;
        }
        if (!stepped)
            throw std::logic_error("BFS backtrack lost its path");
    }
    std::reverse(terms.begin(), terms.end());
    return terms;
}

}  // namespace gadic
