#include <benchmark/benchmark.h>

#include "harmtile/harmonic.hpp"

using namespace harmtile;

static void BM_KernelElimination(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    GridGraph g(side, side);
    for (auto _ : state) {
        auto basis = kernel_basis_elimination(g, Color::Black);
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK(BM_KernelElimination)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

static void BM_KernelTransfer(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    GridGraph g(side, side);
    for (auto _ : state) {
        auto basis = kernel_basis_transfer(g, Color::Black);
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK(BM_KernelTransfer)->Arg(16)->Arg(64)->Arg(256)->Arg(999);

static void BM_KernelDimsTransfer(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    GridGraph g(side, side);
    for (auto _ : state) {
        KernelDims dims = kernel_dims_transfer(g);
        benchmark::DoNotOptimize(dims);
    }
}
BENCHMARK(BM_KernelDimsTransfer)->Arg(64)->Arg(256)->Arg(999);

static void BM_KernelStructured(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    GridGraph g(side, side);
    for (auto _ : state) {
        auto basis = kernel_basis_structured(g, Color::Black);
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK(BM_KernelStructured)->Arg(16)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
