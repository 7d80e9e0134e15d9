#include <benchmark/benchmark.h>

#include "timo/assembly.hpp"
#include "timo/banded.hpp"
#include "timo/stepper.hpp"

using namespace timo;

static void BM_TridiagonalSolve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = BandedMatrix::tridiag(n, 1.0 / 12, 5.0 / 6, 1.0 / 12);
    const std::vector<double> rhs(n, 1.0);
    std::vector<double> x(n);
    SolveWorkspace ws;
    for (auto _ : state) {
        tridiagonal_solve(m, rhs, x, ws);
        benchmark::DoNotOptimize(x.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TridiagonalSolve)->RangeMultiplier(4)->Range(25, 25 * 1024)->Complexity(benchmark::oN);

static void BM_Assemble(benchmark::State& state) {
    const auto p = lookup_preset("mu_zero").parameters;
    const GridConfig g{static_cast<int>(state.range(0)), 35.0, 0.05};
    for (auto _ : state) {
        benchmark::DoNotOptimize(assemble(p, g));
    }
}
BENCHMARK(BM_Assemble)->Arg(26)->Arg(416)->Arg(6656);

static void BM_Step(benchmark::State& state) {
    const auto p = lookup_preset("mu_zero").parameters;
    const GridConfig g{static_cast<int>(state.range(0)), 35.0, 0.05};
    const Mesh mesh = build_mesh(g);
    const auto m = assemble(p, g);
    SimulationState s = build_initial_levels(paper_initial_data(p), mesh, m);
    StepWorkspace ws;
    for (auto _ : state) {
        step(s, m, mesh.kappa, SchemeOptions{}, ws);
        benchmark::DoNotOptimize(s.curr.phi.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Step)->RangeMultiplier(4)->Range(26, 26 * 256)->Complexity(benchmark::oN);

static void BM_ReferenceRun(benchmark::State& state) {
    const auto p = lookup_preset("mu_zero").parameters;
    const auto d = paper_initial_data(p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(p, GridConfig{}, d, nullptr));
    }
}
BENCHMARK(BM_ReferenceRun)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
