#include "modulilab/strata.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>

using namespace modulilab;
using algebra::Rat;

static void BM_Oracle1111(benchmark::State& state) {
    const forms::GQuad g{Rat(1), Rat(2), Rat(3), Rat(5)};
    const auto p = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        const auto r = strata::oracle_count_1111(g, p);
        benchmark::DoNotOptimize(r.count);
    }
}
BENCHMARK(BM_Oracle1111)->Arg(5)->Arg(7)->Arg(11)->Arg(17)->Unit(benchmark::kMillisecond);

static void BM_Oracle22(benchmark::State& state) {
    const strata::ECoeffs e{Rat(2), Rat(3), Rat(5)};
    const auto p = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        const auto r = strata::oracle_count_22(e, p);
        benchmark::DoNotOptimize(r.count);
    }
}
BENCHMARK(BM_Oracle22)->Arg(5)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_ClassifyP3(benchmark::State& state) {
    const forms::GQuad g{Rat(-165), Rat(165), Rat(1517), Rat(173)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(strata::classify_p3(g));
    }
}
BENCHMARK(BM_ClassifyP3);
