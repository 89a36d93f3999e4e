#include "fractrace/energy.hpp"
#include "fractrace/extension.hpp"

#include <benchmark/benchmark.h>

using namespace fractrace;

namespace {

std::vector<GridField> data_for(const GammaParams& p, int N) {
    std::vector<GridField> data;
    for (std::size_t i = 0; i < dirichlet_indices(p).size(); ++i)
        data.push_back(gaussian_field(1, N, 40.0, 1.0 / (1.0 + i), 1.5 + 0.5 * i, 0.3 * i));
    return data;
}

void BM_solve(benchmark::State& state, bool parallel) {
    GammaParams p = GammaParams::make(Rational(7, 2));
    auto data = data_for(p, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(solve_extension(p, data, {parallel}).coeffs.data());
}

void BM_evaluate(benchmark::State& state, bool parallel) {
    GammaParams p = GammaParams::make(Rational(7, 3));
    ExtensionSolution sol = solve_extension(p, data_for(p, static_cast<int>(state.range(0))), {parallel});
    for (auto _ : state) benchmark::DoNotOptimize(sol.evaluate(0.75).values.data());
}

void BM_energy(benchmark::State& state) {
    GammaParams p = GammaParams::make(Rational(5, 2));
    ExtensionSolution sol = solve_extension(p, data_for(p, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(energy(sol).q_form);
}

}  // namespace

BENCHMARK_CAPTURE(BM_solve, parallel, true)->Arg(256)->Arg(1024);
BENCHMARK_CAPTURE(BM_solve, serial, false)->Arg(256)->Arg(1024);
BENCHMARK_CAPTURE(BM_evaluate, parallel, true)->Arg(256)->Arg(1024);
BENCHMARK_CAPTURE(BM_evaluate, serial, false)->Arg(256)->Arg(1024);
BENCHMARK(BM_energy)->Arg(256);

BENCHMARK_MAIN();
