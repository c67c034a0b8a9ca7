#include "modulilab/weyl.hpp"

#include <benchmark/benchmark.h>

using namespace modulilab;
using algebra::Rat;

static void BM_GenerateGamma0(benchmark::State& state) {
    for (auto _ : state) {
        const auto g = weyl::generate(weyl::gamma0_generators());
        benchmark::DoNotOptimize(g.elements.size());
    }
}
BENCHMARK(BM_GenerateGamma0)->Unit(benchmark::kMillisecond);

static void BM_GenerateGamma(benchmark::State& state) {
    for (auto _ : state) {
        const auto g = weyl::generate(weyl::gamma_generators());
        benchmark::DoNotOptimize(g.elements.size());
    }
}
BENCHMARK(BM_GenerateGamma)->Unit(benchmark::kMillisecond);

static void BM_ProjectAndOrbit(benchmark::State& state) {
    const auto full = weyl::generate(weyl::gamma_generators());
    const auto proj = weyl::project_mod_center(full);
    const forms::GQuad corner{Rat(0), Rat(0), Rat(0), Rat(1)};
    for (auto _ : state) {
        const auto orb = weyl::orbit(proj, corner);
        benchmark::DoNotOptimize(orb.size());
    }
}
BENCHMARK(BM_ProjectAndOrbit)->Unit(benchmark::kMillisecond);

static void BM_GenericStabilizer(benchmark::State& state) {
    const auto proj = weyl::project_mod_center(weyl::generate(weyl::gamma_generators()));
    const forms::GQuad g{Rat(1), Rat(2), Rat(3), Rat(5)};
    for (auto _ : state) {
        const auto stab = weyl::stabilizer(proj, g);
        benchmark::DoNotOptimize(stab.elements.size());
    }
}
BENCHMARK(BM_GenericStabilizer)->Unit(benchmark::kMillisecond);
