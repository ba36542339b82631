#include <benchmark/benchmark.h>

#include "gadic/factorization.hpp"
#include "gadic/primality.hpp"
#include "gadic/prime_power.hpp"
#include "gadic/prime_sieve.hpp"
#include "gadic/sun.hpp"

namespace {

using gadic::Integer;

void BM_IsPrimeU64(benchmark::State& state) {
    const Integer n("18446744073709551557");
    for (auto _ : state)
        benchmark::DoNotOptimize(gadic::is_prime(n));
}
BENCHMARK(BM_IsPrimeU64);

void BM_IsPrimeWide(benchmark::State& state) {
    const Integer n = gadic::SunConstants::M();
    for (auto _ : state)
        benchmark::DoNotOptimize(gadic::is_prime(n));
}
BENCHMARK(BM_IsPrimeWide);

void BM_IsPrimePowerHit(benchmark::State& state) {
    const Integer n = gadic::integer_pow(Integer(3), 40);
    for (auto _ : state)
        benchmark::DoNotOptimize(gadic::is_prime_power(n));
}
BENCHMARK(BM_IsPrimePowerHit);

void BM_IsPrimePowerMiss(benchmark::State& state) {
    const Integer n = 58164433;
    for (auto _ : state)
        benchmark::DoNotOptimize(gadic::is_prime_power(n));
}
BENCHMARK(BM_IsPrimePowerMiss);

void BM_FactorSemiprime(benchmark::State& state) {
    const Integer n = Integer(15485863) * 32452843;
    for (auto _ : state)
        benchmark::DoNotOptimize(gadic::factor(n));
}
BENCHMARK(BM_FactorSemiprime);

void BM_SieveMillion(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(gadic::primes_up_to(1'000'000));
}
BENCHMARK(BM_SieveMillion);

}  // namespace
