#include <benchmark/benchmark.h>

#include "gadic/bfs_oracle.hpp"
#include "gadic/generating_set.hpp"
#include "gadic/length3_sieve.hpp"
#include "gadic/plength.hpp"

namespace {

using gadic::Integer;

void BM_PLengthOddRange(benchmark::State& state) {
    for (auto _ : state) {
        int total = 0;
        for (std::int64_t n = 90001; n < 90201; n += 2)
            total += gadic::plength_upper(n).upper_bound;
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_PLengthOddRange);

void BM_PLengthEvenRange(benchmark::State& state) {
    for (auto _ : state) {
        int total = 0;
        for (std::int64_t n = 90002; n < 90202; n += 2)
            total += gadic::plength_upper(n).upper_bound;
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_PLengthEvenRange);

void BM_Length2Miss(benchmark::State& state) {
    // Worst case: the full cap is scanned without a hit.
    for (auto _ : state)
        benchmark::DoNotOptimize(gadic::length2_witness(58164433, state.range(0)));
}
BENCHMARK(BM_Length2Miss)->Arg(16)->Arg(40)->Arg(64);

void BM_SieveChunk(benchmark::State& state) {
    gadic::Length3SieveOptions options;
    options.two_power_cap = 40;
    options.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(gadic::sieve_length3_candidates(3, 99999, options));
}
BENCHMARK(BM_SieveChunk)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_BfsWindow(benchmark::State& state) {
    const auto s = gadic::GeneratingSetDescriptor::single(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(gadic::bfs_lengths(s, -2000, 2000, 4));
}
BENCHMARK(BM_BfsWindow)->Unit(benchmark::kMillisecond);

}  // namespace
