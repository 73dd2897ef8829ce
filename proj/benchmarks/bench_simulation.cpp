#include <benchmark/benchmark.h>

#include "taildep/ranked_data.hpp"
#include "taildep/simulation.hpp"

namespace {

using namespace taildep;

void BM_PositiveStable(benchmark::State& state) {
    const double w = static_cast<double>(state.range(0)) / 100.0;
    std::mt19937_64 rng(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_positive_stable(w, rng));
}
BENCHMARK(BM_PositiveStable)->Arg(10)->Arg(50)->Arg(90);

void BM_SimulateRows(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const int K = static_cast<int>(state.range(1));
    StructureGenConfig cfg;
    cfg.d = d;
    cfg.K = K;
    cfg.max_size = std::min(8, d / 2);
    std::mt19937_64 srng = RngStream(5, 0).engine(0);
    const DependenceStructure truth = generate_structure(cfg, srng);
    std::mt19937_64 rng = RngStream(5, 0).engine(1);
    std::vector<double> row;
    for (auto _ : state) {
        const auto noisy = perturb_noisy(truth, rng);
        sample_asym_logistic_row(noisy, d, 0.1, rng, row);
        benchmark::DoNotOptimize(row.data());
    }
}
BENCHMARK(BM_SimulateRows)->Args({20, 10})->Args({100, 80});

void BM_ComputeRanks(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    StructureGenConfig cfg;
    cfg.d = d;
    cfg.K = d / 2;
    cfg.max_size = std::min(8, d / 2);
    const SimulatedBenchmark sim =
        simulate_benchmark(n, cfg, 0.1, RngStream(9, 0));
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_ranks(sim.data));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(n) * d);
}
BENCHMARK(BM_ComputeRanks)->Args({20000, 20})->Args({50000, 100})
    ->Unit(benchmark::kMillisecond);

}  // namespace
