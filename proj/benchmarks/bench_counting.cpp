// Microbenchmarks for the rank/counting kernels that dominate the
// lattice search: exceedance bit-rows, joint counts, and the
// min-Pareto/Hill path.

#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "taildep/estimators.hpp"
#include "taildep/ranked_data.hpp"
#include "taildep/tail_functions.hpp"

namespace {

using namespace taildep;

RankedData random_ranked(int n, int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::int32_t> ranks(static_cast<std::size_t>(n) * d);
    for (int j = 0; j < d; ++j) {
        auto* col = ranks.data() + static_cast<std::size_t>(j) * n;
        std::iota(col, col + n, 1);
        std::shuffle(col, col + n, rng);
    }
    return RankedData(n, d, std::move(ranks));
}

FeatureSet first_features(int s) {
    FeatureSet alpha;
    for (int j = 0; j < s; ++j) alpha.add(j);
    return alpha;
}

void BM_JointCount(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int s = static_cast<int>(state.range(1));
    const RankedData rd = random_ranked(n, s, 42);
    const FeatureSet alpha = first_features(s);
    const long level = n / 200;
    rd.exceedance(0, level);  // warm the cache outside the loop
    for (auto _ : state)
        benchmark::DoNotOptimize(joint_exceedance_count(rd, alpha, level));
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_JointCount)
    ->Args({20000, 2})
    ->Args({20000, 5})
    ->Args({100000, 2})
    ->Args({100000, 8});

void BM_ExceedanceCacheMiss(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = n / 200;
    std::mt19937_64 rng(7);
    std::vector<std::int32_t> ranks(static_cast<std::size_t>(n) * 2);
    for (int j = 0; j < 2; ++j) {
        auto* col = ranks.data() + static_cast<std::size_t>(j) * n;
        std::iota(col, col + n, 1);
        std::shuffle(col, col + n, rng);
    }
    for (auto _ : state) {
        state.PauseTiming();
        RankedData rd(n, 2, ranks);
        state.ResumeTiming();
        benchmark::DoNotOptimize(rd.exceedance(0, k).count());
    }
}
BENCHMARK(BM_ExceedanceCacheMiss)->Arg(20000)->Arg(100000);

void BM_HillEta(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int s = static_cast<int>(state.range(1));
    const RankedData rd = random_ranked(n, s, 11);
    const FeatureSet alpha = first_features(s);
    const TailParams p{n / 200};
    for (auto _ : state)
        benchmark::DoNotOptimize(hill_eta_hat(rd, alpha, p));
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_HillEta)->Args({20000, 2})->Args({100000, 2})->Args({100000, 6});

void BM_PengCriterion(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const RankedData rd = random_ranked(n, 4, 13);
    const FeatureSet alpha = first_features(4);
    const TailParams p{n / 200};
    const TestConfig cfg;
    rho_hat(rd, alpha, p);  // warm the bit-row cache
    for (auto _ : state)
        benchmark::DoNotOptimize(peng_criterion(rd, alpha, p, cfg));
}
BENCHMARK(BM_PengCriterion)->Arg(20000)->Arg(100000);

void BM_KappaCriterion(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const RankedData rd = random_ranked(n, 4, 17);
    const FeatureSet alpha = first_features(4);
    const TailParams p{n / 200};
    const TestConfig cfg;
    rho_hat(rd, alpha, p);
    for (auto _ : state)
        benchmark::DoNotOptimize(kappa_criterion(rd, alpha, p, cfg));
}
BENCHMARK(BM_KappaCriterion)->Arg(20000)->Arg(100000);

}  // namespace
