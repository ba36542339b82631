#include "gadic/length3_sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <thread>

#include "gadic/prime_power.hpp"
#include "gadic/prime_sieve.hpp"

namespace gadic {

namespace {

constexpr std::int64_t kMaxRangeEnd = std::int64_t{1} << 28;
constexpr unsigned kBitmapShiftCap = 21;  // shifts up to 2^21 hit the bitmap
constexpr std::int64_t kChunk = 1 << 12;

// true at v iff v is 1 or a prime power; index 0 is false.
std::vector<bool> prime_power_bitmap(std::int64_t bound) {
    std::vector<bool> table(static_cast<std::size_t>(bound) + 1, false);
    table[1] = true;
    for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(bound)))
        for (std::uint64_t v = p; v <= static_cast<std::uint64_t>(bound); v *= p) {
            table[static_cast<std::size_t>(v)] = true;
            if (v > static_cast<std::uint64_t>(bound) / p)
                break;
        }
    return table;
}

}  // namespace

std::vector<Integer> sieve_length3_candidates(const Integer& lo_arg, const Integer& hi_arg,
                                              const Length3SieveOptions& options) {
    if (lo_arg < 1 || lo_arg > hi_arg)
        throw std::invalid_argument("need 1 <= lo <= hi");
    if (lo_arg % 2 == 0 || hi_arg % 2 == 0)
        throw std::invalid_argument("sieve range endpoints must be odd");
    if (hi_arg > kMaxRangeEnd)
        throw std::invalid_argument("sieve range end above 2^28 is not supported");
    const std::int64_t lo = to_int64(lo_arg);
    const std::int64_t hi = to_int64(hi_arg);
    const unsigned cap = options.two_power_cap;

    const unsigned bitmap_shift = std::min(cap, kBitmapShiftCap);
    const std::int64_t bitmap_bound = hi + (std::int64_t{1} << bitmap_shift);
    const std::vector<bool> is_pp = prime_power_bitmap(bitmap_bound);

    const auto hit_small = [&](std::int64_t v) { return is_pp[static_cast<std::size_t>(v)]; };
    const auto hit = [&](const Integer& v) {
        if (v <= bitmap_bound)
            return hit_small(to_int64(v));
        return is_prime_power(v).has_value();
    };

    // Candidate test with early exit on the first shift that lands on a
    // prime power. Shifts are probed small-to-large: nearly every n is
    // eliminated by the bitmap before any big-integer work happens.
    const auto survives = [&](std::int64_t n) {
        if (hit_small(n))
            return false;
        std::int64_t two_j = 1;
        for (unsigned j = 0; j <= bitmap_shift; ++j, two_j <<= 1) {
            const std::int64_t diff = n >= two_j ? n - two_j : two_j - n;
            if (diff != 0 && hit_small(diff))
                return false;
            if (hit_small(n + two_j))
                return false;
        }
        Integer big = Integer(1) << (bitmap_shift + 1);
        for (unsigned j = bitmap_shift + 1; j <= cap; ++j, big <<= 1) {
            const Integer diff = abs_integer(Integer(n) - big);
            if (diff != 0 && hit(diff))
                return false;
            if (hit(Integer(n) + big))
                return false;
        }
        return true;
    };

    unsigned thread_count = options.threads ? options.threads : std::thread::hardware_concurrency();
    if (thread_count == 0)
        thread_count = 1;

    const std::int64_t chunk_count = (hi - lo) / 2 / kChunk + 1;
    std::atomic<std::int64_t> next_chunk{0};
    std::vector<std::vector<std::int64_t>> found(static_cast<std::size_t>(chunk_count));

    const auto worker = [&] {
        while (true) {
            const std::int64_t chunk = next_chunk.fetch_add(1);
            if (chunk >= chunk_count)
                return;
            const std::int64_t first = lo + 2 * chunk * kChunk;
            const std::int64_t last = std::min(hi, first + 2 * (kChunk - 1));
            auto& local = found[static_cast<std::size_t>(chunk)];
            for (std::int64_t n = first; n <= last; n += 2)
                if (survives(n))
                    local.push_back(n);
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (unsigned t = 0; t < thread_count; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();

    std::vector<Integer> survivors;
    for (const auto& local : found)
        for (std::int64_t n : local)
            survivors.emplace_back(n);
    return survivors;
}

}  // namespace gadic
