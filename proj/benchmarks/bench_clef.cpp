// End-to-end lattice search cost on simulated data, plus the candidate
// generator in isolation.

#include <benchmark/benchmark.h>

#include "taildep/clef.hpp"
#include "taildep/simulation.hpp"

namespace {

using namespace taildep;

SimulatedBenchmark make_dataset(int n, int d, int K) {
    StructureGenConfig cfg;
    cfg.d = d;
    cfg.K = K;
    cfg.max_size = std::min(8, d / 2);
    return simulate_benchmark(n, cfg, 0.1, RngStream(31, 0));
}

void BM_RunClef(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    const int K = static_cast<int>(state.range(2));
    const auto kind = static_cast<CriterionKind>(state.range(3));
    const SimulatedBenchmark sim = make_dataset(n, d, K);
    const RankedData rd = compute_ranks(sim.data);
    const TailParams p{n / 200};
    const TestConfig cfg;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_clef(rd, p, cfg, kind, 1));
}
BENCHMARK(BM_RunClef)
    ->Args({20000, 20, 10, static_cast<int>(CriterionKind::kHill)})
    ->Args({20000, 20, 10, static_cast<int>(CriterionKind::kPeng)})
    ->Args({50000, 50, 30, static_cast<int>(CriterionKind::kHill)})
    ->Args({50000, 50, 30, static_cast<int>(CriterionKind::kPeng)})
    ->Unit(benchmark::kMillisecond);

void BM_GenerateCandidates(benchmark::State& state) {
    // All pairs over d features survive; generating the triples is the
    // worst-case join.
    const int d = static_cast<int>(state.range(0));
    LevelFamily pairs;
    pairs.level = 2;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            FeatureSet s;
            s.add(a);
            s.add(b);
            pairs.sets.push_back(s);
        }
    for (auto _ : state)
        benchmark::DoNotOptimize(generate_candidates(pairs));
    state.SetItemsProcessed(state.iterations() *
                            static_cast<long>(pairs.sets.size()));
}
BENCHMARK(BM_GenerateCandidates)->Arg(20)->Arg(50)->Arg(100)
    ->Unit(benchmark::kMillisecond);

}  // namespace
