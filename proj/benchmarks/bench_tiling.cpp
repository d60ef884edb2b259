#include <benchmark/benchmark.h>

#include "harmtile/count.hpp"

using namespace harmtile;

static void BM_EnumerateTilings(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto tilings = enumerate_tilings(side, side - 1);
        benchmark::DoNotOptimize(tilings);
    }
}
BENCHMARK(BM_EnumerateTilings)->Arg(4)->Arg(7)->Arg(10);

static void BM_PhiSingleVector(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    GridGraph g(side, side);
    auto basis = kernel_basis_transfer(g, Color::Black);
    PolarizedVector u = basis.front();
    for (std::size_t i = 1; i < basis.size(); ++i) u ^= basis[i];
    for (auto _ : state) {
        Tiling t = phi(u);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_PhiSingleVector)->Arg(12)->Arg(24)->Arg(48);

static void BM_ValidateTiling(benchmark::State& state) {
    auto tilings = enumerate_tilings(10, 4);
    for (auto _ : state) {
        for (const Tiling& t : tilings) {
            ValidationReport report = validate_tiling(t);
            benchmark::DoNotOptimize(report);
        }
    }
}
BENCHMARK(BM_ValidateTiling);
