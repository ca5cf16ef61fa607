#include <benchmark/benchmark.h>

#include "fockprep/probability.hpp"
#include "fockprep/simulator.hpp"

using namespace fockprep;

namespace {

SynthesisPlan worked_example_plan() {
    return compile(phase_state({Complex(0.4), 6}),
                   BeamSplitter::from_transmittance(Complex(0.99)));
}

void BM_LaguerreSequence(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(laguerre_sequence(n, 3, -12.5));
}
BENCHMARK(BM_LaguerreSequence)->Arg(32)->Arg(256);

void BM_DisplacementMatrix(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(displacement_matrix(Complex(1.3, -0.4), dim, dim));
    state.SetComplexityN(dim);
}
BENCHMARK(BM_DisplacementMatrix)->Arg(128)->Arg(512)->Arg(1024)->Complexity();

void BM_FindRoots(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    std::vector<Complex> c(static_cast<size_t>(degree) + 1);
    double fact = 1.0;
    for (int n = 0; n <= degree; ++n) {
        if (n > 0) fact *= n;
        c[n] = std::pow(0.4, n) / std::sqrt(fact);
    }
    const Polynomial p(c);
    for (auto _ : state) benchmark::DoNotOptimize(find_roots(p));
}
BENCHMARK(BM_FindRoots)->Arg(6)->Arg(12)->Arg(20);

void BM_Compile(benchmark::State& state) {
    const auto t = phase_state({Complex(0.4), 6});
    const auto bs = BeamSplitter::from_transmittance(Complex(0.99));
    for (auto _ : state) benchmark::DoNotOptimize(compile(t, bs));
}
BENCHMARK(BM_Compile);

void BM_Breakdown(benchmark::State& state) {
    const auto plan = worked_example_plan();
    for (auto _ : state) benchmark::DoNotOptimize(breakdown(plan));
}
BENCHMARK(BM_Breakdown);

void BM_RunPlan(benchmark::State& state) {
    const auto plan = worked_example_plan();
    for (auto _ : state) benchmark::DoNotOptimize(run_plan(plan));
}
BENCHMARK(BM_RunPlan);

} // namespace

BENCHMARK_MAIN();
