#include <benchmark/benchmark.h>

#include <complex>
#include <numbers>
#include <vector>

#include "ringop/operator_matrix.hpp"
#include "ringop/spectrum.hpp"
#include "ringop/superposition.hpp"
#include "ringop/sweep.hpp"

namespace {

void BM_BuildTwisted(benchmark::State& state) {
    const ringop::RingGrid grid(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto m = ringop::build_twisted_operator(grid, 0.4, 1.1);
        benchmark::DoNotOptimize(m.entries().data());
    }
}
BENCHMARK(BM_BuildTwisted)->Arg(20)->Arg(80)->Arg(320);

void BM_HermitianEigen(benchmark::State& state) {
    const ringop::RingGrid grid(static_cast<int>(state.range(0)));
    const auto m = ringop::build_twisted_operator(grid, 0.4, 1.1);
    for (auto _ : state) {
        auto spectrum = ringop::hermitian_eigen(m);
        benchmark::DoNotOptimize(spectrum.eigenvalues.data());
    }
}
BENCHMARK(BM_HermitianEigen)->Arg(20)->Arg(80)->Arg(320)->Unit(benchmark::kMicrosecond);

void BM_AnalyticSpectrum(benchmark::State& state) {
    const ringop::RingGrid grid(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto spectrum = ringop::analytic_twisted_spectrum(grid, 0.4, 1.1);
        benchmark::DoNotOptimize(spectrum.data());
    }
}
BENCHMARK(BM_AnalyticSpectrum)->Arg(20)->Arg(320);

void BM_PhiSweep(benchmark::State& state) {
    const ringop::RingGrid grid(20);
    for (auto _ : state) {
        auto table = ringop::phi_sweep(grid, 0.0, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(table.rows.data());
    }
}
BENCHMARK(BM_PhiSweep)->Arg(11)->Arg(181)->Unit(benchmark::kMillisecond);

void BM_Density(benchmark::State& state) {
    std::vector<ringop::SuperpositionTerm> terms;
    for (int j = 0; j < static_cast<int>(state.range(0)); ++j) {
        terms.push_back({static_cast<double>(j), {1.0 / (j + 1.0), 0.1}});
    }
    const ringop::SuperpositionState sup(0.3, 0.1, std::move(terms));
    double x = -std::numbers::pi;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ringop::density(sup, x));
        x += 1e-3;
    }
}
BENCHMARK(BM_Density)->Arg(4)->Arg(32);

void BM_GramMatrix(benchmark::State& state) {
    std::vector<double> qs;
    for (int i = 0; i < static_cast<int>(state.range(0)); ++i) {
        qs.push_back(0.37 * i);
    }
    for (auto _ : state) {
        auto g = ringop::gram_matrix(qs, 0.2);
        benchmark::DoNotOptimize(g.data());
    }
}
BENCHMARK(BM_GramMatrix)->Arg(8)->Arg(64);

} // namespace

BENCHMARK_MAIN();
