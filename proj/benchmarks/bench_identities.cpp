#include "modulilab/birational.hpp"
#include "modulilab/forms.hpp"

#include <benchmark/benchmark.h>

using namespace modulilab;

static void BM_ChiVanishingSampled(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            birational::verify_chi_vanishing(false, 20240901, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_ChiVanishingSampled)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_ChiVanishingSymbolic(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(birational::verify_chi_vanishing(true));
    }
}
BENCHMARK(BM_ChiVanishingSymbolic)->Unit(benchmark::kMillisecond);

static void BM_RhoSigma(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(birational::rho_sigma_identities());
    }
}
BENCHMARK(BM_RhoSigma)->Unit(benchmark::kMillisecond);

static void BM_MolienSeries(benchmark::State& state) {
    const auto order = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(forms::molien_check(order));
    }
}
BENCHMARK(BM_MolienSeries)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
