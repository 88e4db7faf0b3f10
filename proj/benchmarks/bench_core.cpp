#include <benchmark/benchmark.h>

#include <cstdint>

#include "sumspec/classify.hpp"
#include "sumspec/oracle.hpp"
#include "sumspec/spectrum.hpp"

namespace {

void BM_spectrum(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sumspec::spectrum(n));
    }
}
BENCHMARK(BM_spectrum)->Arg(2017)->Arg(100'000)->Arg(10'000'000);

void BM_oracle_spectrum(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sumspec::oracle_spectrum(n));
    }
}
BENCHMARK(BM_oracle_spectrum)->Arg(2017)->Arg(100'000);

void BM_three_square_rep(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sumspec::three_square_rep(n));
    }
}
BENCHMARK(BM_three_square_rep)->Arg(8067)->Arg(99'999'989);

void BM_witness(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const std::int64_t T = (n % 2 == 0) ? 2 : 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sumspec::witness(n, T));
    }
}
BENCHMARK(BM_witness)->Arg(2017)->Arg(99'999'989);

void BM_member_by_T_sweep(benchmark::State& state) {
    const auto max_n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        std::uint64_t members = 0;
        for (std::uint64_t n = 16; n <= max_n; n += 2) {
            members += sumspec::member_by_T(8, n) ? 1 : 0;
        }
        benchmark::DoNotOptimize(members);
    }
}
BENCHMARK(BM_member_by_T_sweep)->Arg(4096)->Arg(1'000'000);

}  // namespace

BENCHMARK_MAIN();
