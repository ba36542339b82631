#include <benchmark/benchmark.h>

#include "gadic/expansion.hpp"
#include "gadic/lambda.hpp"

namespace {

using gadic::Integer;

void BM_ExpandSmall(benchmark::State& state) {
    const std::int64_t g = state.range(0);
    Integer n = 20233509;
    for (auto _ : state)
        benchmark::DoNotOptimize(gadic::expand(n, g));
}
BENCHMARK(BM_ExpandSmall)->Arg(2)->Arg(5)->Arg(19)->Arg(100);

void BM_ExpandWide(benchmark::State& state) {
    const Integer n = gadic::integer_pow(Integer(10), static_cast<unsigned>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(gadic::expand(n + 12345, 3));
}
BENCHMARK(BM_ExpandWide)->Arg(20)->Arg(100)->Arg(500);

void BM_GLengthScan(benchmark::State& state) {
    const std::int64_t g = state.range(0);
    for (auto _ : state) {
        Integer total = 0;
        for (std::int64_t n = 1; n <= 2000; ++n)
            total += gadic::g_length(n, g);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_GLengthScan)->Arg(2)->Arg(6)->Arg(19);

void BM_Lambda(benchmark::State& state) {
    for (auto _ : state)
        for (std::int64_t g = 2; g <= 29; ++g)
            for (std::int64_t k = 1; k <= 20; ++k)
                benchmark::DoNotOptimize(gadic::lambda(g, k));
}
BENCHMARK(BM_Lambda);

void BM_CompareByDigits(benchmark::State& state) {
    const auto a = gadic::expand(Integer("123456789123456789"), 5);
    const auto b = gadic::expand(Integer("123456789123456788"), 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(gadic::compare_by_digits(a, b));
}
BENCHMARK(BM_CompareByDigits);

}  // namespace
