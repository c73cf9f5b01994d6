#include <benchmark/benchmark.h>

#include "stabrep/char_oracle.hpp"
#include "stabrep/theta_order.hpp"

using namespace stabrep;

namespace {

FormalCharacter natural_power(Family f, int rank, int k) {
    FormalCharacter c = trivial_character(f, rank);
    for (int i = 0; i < k; ++i) c = mul_serial(c, natural_character(f, rank));
    return c;
}

void BM_MulParallel(benchmark::State& state) {
    const auto a = natural_power(Family::O, 10, static_cast<int>(state.range(0)));
    const auto b = natural_character(Family::O, 10);
    for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
    state.counters["terms"] = static_cast<double>(a.terms().size());
}

void BM_MulSerial(benchmark::State& state) {
    const auto a = natural_power(Family::O, 10, static_cast<int>(state.range(0)));
    const auto b = natural_character(Family::O, 10);
    for (auto _ : state) benchmark::DoNotOptimize(mul_serial(a, b));
    state.counters["terms"] = static_cast<double>(a.terms().size());
}

void BM_PosetParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ThetaPoset(Family::SL, static_cast<std::size_t>(state.range(0))));
}

void BM_PosetSerial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(ThetaPoset::build_serial(Family::SL, static_cast<std::size_t>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_MulParallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulSerial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PosetParallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PosetSerial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
