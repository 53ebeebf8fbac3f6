// Serial-vs-OpenMP comparison for the sweep kernels and the permanent.

#include <benchmark/benchmark.h>

#include <random>

#include "ptsim/figures.hpp"
#include "ptsim/permanent.hpp"

namespace {

using namespace ptsim;

SweepSpec dense_fig4c_spec(std::size_t points) {
    SweepSpec spec = default_spec_for(FigureId::fig4c);
    spec.gamma_grid = linspace(0.0, 2.4 * spec.kappa, points);
    return spec;
}

void BM_fig4c(benchmark::State& state, Exec exec) {
    const SweepSpec spec = dense_fig4c_spec(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        SweepTable t = run_fig4c(spec, exec);
        benchmark::DoNotOptimize(t);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_fig3bcd(benchmark::State& state, Exec exec) {
    SweepSpec spec = default_spec();
    spec.gamma_grid = linspace(0.0, 0.63, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        SweepTable t = run_fig3bcd(spec, exec);
        benchmark::DoNotOptimize(t);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_hom_family(benchmark::State& state, Exec exec) {
    SweepSpec spec = default_spec();
    spec.gamma_grid = linspace(0.0, 0.63, static_cast<std::size_t>(state.range(0)));
    spec.delay_grid = linspace(-0.8, 0.8, 2001);
    for (auto _ : state) {
        SweepTable t = run_fig4b(spec, exec);
        benchmark::DoNotOptimize(t);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * 2001);
}

CMat random_matrix(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CMat a(n, std::vector<Complex>(n));
    for (auto& row : a) {
        for (auto& c : row) c = Complex{u(rng), u(rng)};
    }
    return a;
}

void BM_permanent(benchmark::State& state, bool parallel) {
    const CMat a = random_matrix(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) {
        Complex p = parallel ? permanent_parallel(a) : permanent_serial(a);
        benchmark::DoNotOptimize(p);
    }
}

}  // namespace

BENCHMARK_CAPTURE(BM_fig4c, serial, Exec::serial)->Arg(201)->Arg(20001);
BENCHMARK_CAPTURE(BM_fig4c, parallel, Exec::parallel)->Arg(201)->Arg(20001);
BENCHMARK_CAPTURE(BM_fig3bcd, serial, Exec::serial)->Arg(10000);
BENCHMARK_CAPTURE(BM_fig3bcd, parallel, Exec::parallel)->Arg(10000);
BENCHMARK_CAPTURE(BM_hom_family, serial, Exec::serial)->Arg(64);
BENCHMARK_CAPTURE(BM_hom_family, parallel, Exec::parallel)->Arg(64);
BENCHMARK_CAPTURE(BM_permanent, serial, false)->Arg(12)->Arg(16)->Arg(18);
BENCHMARK_CAPTURE(BM_permanent, parallel, true)->Arg(12)->Arg(16)->Arg(18);

BENCHMARK_MAIN();
