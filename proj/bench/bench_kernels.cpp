// Serial reference against the OpenMP elimination kernel, plus the full
// pipeline on a few fans.

#include "toric/maximality.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace toric;

namespace {

F2Matrix random_matrix(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t w = 0; w < m.stride(); ++w)
            m.row_words(i)[w] = rng();
    // Clear bits past the last column.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = n; c < m.stride() * kWordBits; ++c)
            m.row_words(i)[c / kWordBits] &= ~(std::uint64_t{1} << (c % kWordBits));
    return m;
}

void BM_rank(benchmark::State& state, Exec exec)
{
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(m, exec));
    state.SetComplexityN(state.range(0));
}

void BM_rref(benchmark::State& state, Exec exec)
{
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(rref(m, exec));
}

void BM_check(benchmark::State& state, Fan (*make)())
{
    const Fan f = make();
    for (auto _ : state)
        benchmark::DoNotOptimize(run_check(f));
}

Fan p4() { return projective_fan(4); }
Fan p2xh3() { return product_fan(projective_fan(2), hirzebruch_fan(3)); }
Fan p1_4()
{
    const auto sq = product_fan(projective_fan(1), projective_fan(1));
    return product_fan(sq, sq);
}

} // namespace

BENCHMARK_CAPTURE(BM_rank, serial, Exec::serial)->RangeMultiplier(2)->Range(256, 4096)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_rank, parallel, Exec::parallel)->RangeMultiplier(2)->Range(256, 4096)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_rref, serial, Exec::serial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_rref, parallel, Exec::parallel)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_check, projective4, p4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_check, projective1_power4, p1_4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_check, projective2_x_hirzebruch3, p2xh3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
