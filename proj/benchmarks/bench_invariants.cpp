#include "modulilab/forms.hpp"
#include "modulilab/mpoly.hpp"

#include <benchmark/benchmark.h>

#include <array>
#include <string>
#include <vector>

using namespace modulilab;
using algebra::MPoly;
using algebra::Rat;

static void BM_NumericInvariants(benchmark::State& state) {
    const forms::GQuad g{Rat(13, 7), Rat(-5, 3), Rat(22, 9), Rat(41, 11)};
    for (auto _ : state) {
        const auto inv = forms::invariants(forms::g_form(g));
        benchmark::DoNotOptimize(inv.T);
    }
}
BENCHMARK(BM_NumericInvariants);

static void BM_QuotientPoint(benchmark::State& state) {
    const forms::GQuad g{Rat(13, 7), Rat(-5, 3), Rat(22, 9), Rat(41, 11)};
    for (auto _ : state) {
        const auto wp = forms::quotient_point(g);
        benchmark::DoNotOptimize(wp.coords.size());
    }
}
BENCHMARK(BM_QuotientPoint);

static void BM_SymbolicInvariants(benchmark::State& state) {
    const std::vector<std::string> vars{"a", "b", "c", "d"};
    const std::array<MPoly<Rat>, 4> sym{
        MPoly<Rat>::variable(vars, "a", Rat(1)), MPoly<Rat>::variable(vars, "b", Rat(1)),
        MPoly<Rat>::variable(vars, "c", Rat(1)), MPoly<Rat>::variable(vars, "d", Rat(1))};
    for (auto _ : state) {
        const auto inv = forms::invariants(forms::g_form(sym));
        benchmark::DoNotOptimize(inv.T.term_count());
    }
}
BENCHMARK(BM_SymbolicInvariants)->Unit(benchmark::kMillisecond);

static void BM_DiscriminantDivision(benchmark::State& state) {
    const std::vector<std::string> vars{"a", "b", "c", "d"};
    const std::array<MPoly<Rat>, 4> sym{
        MPoly<Rat>::variable(vars, "a", Rat(1)), MPoly<Rat>::variable(vars, "b", Rat(1)),
        MPoly<Rat>::variable(vars, "c", Rat(1)), MPoly<Rat>::variable(vars, "d", Rat(1))};
    const auto inv = forms::invariants(forms::g_form(sym));
    const MPoly<Rat> disc =
        inv.S.pow(3) - MPoly<Rat>::constant(vars, Rat(27)) * inv.T.pow(2);
    MPoly<Rat> prod = MPoly<Rat>::constant(vars, Rat(1));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) prod = prod * (sym[i] * sym[i] - sym[j] * sym[j]);
    for (auto _ : state) {
        const auto quot = algebra::divide_exact(disc, prod);
        benchmark::DoNotOptimize(quot.has_value());
    }
}
BENCHMARK(BM_DiscriminantDivision)->Unit(benchmark::kMillisecond);
