#include <benchmark/benchmark.h>

#include <symreal/karasev.hpp>
#include <symreal/poisson.hpp>
#include <symreal/realization.hpp>
#include <symreal/weights.hpp>

using namespace symreal;

namespace
{

/// pi^{12} = (x^1)^2 + x^2 in d = 2.
PoissonStructure quadratic()
{
    std::map<std::pair<unsigned, unsigned>, PhasePoly> entries;
    entries[{0, 1}] = PhasePoly::x(2, 0) * PhasePoly::x(2, 0) + PhasePoly::x(2, 1);
    return PoissonStructure(2, std::move(entries));
}

/// so(3) linear structure in d = 3.
PoissonStructure so3()
{
    std::map<std::pair<unsigned, unsigned>, PhasePoly> entries;
    entries[{0, 1}] = PhasePoly::x(3, 2);
    entries[{1, 2}] = PhasePoly::x(3, 0);
    entries[{0, 2}] = -PhasePoly::x(3, 1);
    return PoissonStructure(3, std::move(entries));
}

void BM_WeightTable(benchmark::State &state)
{
    const auto degree = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        KontsevichWeights fresh;
        for (const auto &t : enumerate_trees(degree)) {
            benchmark::DoNotOptimize(fresh.weight(t));
        }
    }
}
BENCHMARK(BM_WeightTable)->DenseRange(4, 8, 2);

void BM_SourceSeriesQuadratic(benchmark::State &state)
{
    const auto pi = quadratic();
    const auto order = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(source_series(pi, order));
    }
}
BENCHMARK(BM_SourceSeriesQuadratic)->DenseRange(3, 7, 2);

void BM_SourceSeriesSo3(benchmark::State &state)
{
    const auto pi = so3();
    const auto order = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(source_series(pi, order));
    }
}
BENCHMARK(BM_SourceSeriesSo3)->DenseRange(3, 7, 2);

void BM_KarasevSeriesQuadratic(benchmark::State &state)
{
    const auto pi = quadratic();
    const auto order = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(karasev_series(pi, order));
    }
}
BENCHMARK(BM_KarasevSeriesQuadratic)->DenseRange(3, 5, 1);

void BM_RealizationResidual(benchmark::State &state)
{
    const auto pi = so3();
    const auto order = static_cast<unsigned>(state.range(0));
    const auto s = source_series(pi, order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(realization_residual(s, pi, order));
    }
}
BENCHMARK(BM_RealizationResidual)->DenseRange(3, 5, 1);

} // namespace

BENCHMARK_MAIN();
