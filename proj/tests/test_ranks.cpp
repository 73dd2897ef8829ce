#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "taildep/ranked_data.hpp"
#include "taildep/tail_functions.hpp"

using namespace taildep;

namespace {

DataMatrix matrix_from_columns(const std::vector<std::vector<double>>& cols) {
    const int d = static_cast<int>(cols.size());
    const int n = static_cast<int>(cols[0].size());
    DataMatrix m(n, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < n; ++i) m(i, j) = cols[j][i];
    return m;
}

}  // namespace

TEST_SUITE_BEGIN("ranks");

TEST_CASE("strictly ordered column ranks ascending") {
    const DataMatrix m =
        matrix_from_columns({{3.1, 0.5, 7.2}, {1.0, 2.0, 3.0}});
    const RankedData rd = compute_ranks(m);
    CHECK(rd.rank(0, 0) == 2);
    CHECK(rd.rank(1, 0) == 1);
    CHECK(rd.rank(2, 0) == 3);
}

TEST_CASE("first-occurrence breaks ties by row index") {
    const DataMatrix m = matrix_from_columns({{5, 5, 1}, {1, 2, 3}});
    const RankedData rd = compute_ranks(m, TiePolicy::kFirstOccurrence);
    CHECK(rd.rank(0, 0) == 2);
    CHECK(rd.rank(1, 0) == 3);
    CHECK(rd.rank(2, 0) == 1);
}

TEST_CASE("forbidding policy rejects ties naming the columns") {
    const DataMatrix m =
        matrix_from_columns({{5, 5, 1}, {1, 2, 3}, {2, 2, 2}});
    CHECK_THROWS_WITH_AS(compute_ranks(m, TiePolicy::kForbid),
                         doctest::Contains("column(s) 1 3"), DataError);
    // No ties: forbid behaves like the default.
    const DataMatrix clean = matrix_from_columns({{5, 4, 1}, {1, 2, 3}});
    const RankedData rd = compute_ranks(clean, TiePolicy::kForbid);
    CHECK(rd.rank(0, 0) == 3);
}

TEST_CASE("jitter is deterministic per seed and yields a permutation") {
    const DataMatrix m =
        matrix_from_columns({{5, 5, 5, 1}, {1, 2, 3, 4}});
    const RankedData a = compute_ranks(m, TiePolicy::kJitter, 99);
    const RankedData b = compute_ranks(m, TiePolicy::kJitter, 99);
    const RankedData c = compute_ranks(m, TiePolicy::kJitter, 100);
    bool all_equal = true, any_diff_seed = false;
    std::vector<bool> seen(4, false);
    for (int i = 0; i < 4; ++i) {
        all_equal = all_equal && a.rank(i, 0) == b.rank(i, 0);
        any_diff_seed = any_diff_seed || a.rank(i, 0) != c.rank(i, 0);
        seen[static_cast<std::size_t>(a.rank(i, 0)) - 1] = true;
    }
    CHECK(all_equal);
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool x) { return x; }));
    // Untied column is unaffected by the jitter keys.
    for (int i = 0; i < 4; ++i) CHECK(a.rank(i, 1) == i + 1);
    (void)any_diff_seed;  // seeds may coincide on tiny inputs
}

TEST_CASE("ranks are invariant under strictly increasing maps") {
    std::mt19937_64 rng(31);
    std::normal_distribution<double> gauss;
    const int n = 60, d = 3;
    DataMatrix m(n, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = gauss(rng);
    DataMatrix warped = m;
    for (int i = 0; i < n; ++i) warped(i, 1) = std::exp(warped(i, 1));

    const RankedData a = compute_ranks(m);
    const RankedData b = compute_ranks(warped);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) CHECK(a.rank(i, j) == b.rank(i, j));

    // Bit-identical downstream values.
    const FeatureSet alpha = FeatureSet::of({0, 1, 2});
    const TailParams p{7};
    CHECK(rho_hat(a, alpha, p) == rho_hat(b, alpha, p));
    CHECK(mu_delta_hat(a, alpha, p) == mu_delta_hat(b, alpha, p));
}

TEST_CASE("pareto values live in [1, n]") {
    const auto ranks = oracle::random_ranks(40, 2, 5);
    const RankedData rd = oracle::to_ranked(ranks);
    for (int i = 0; i < 40; ++i) {
        CHECK(rd.pareto(i, 0) >= 1.0);
        CHECK(rd.pareto(i, 0) <= 40.0);
    }
}

TEST_CASE("RankedData rejects non-permutations") {
    CHECK_THROWS_AS(RankedData(2, 2, {1, 1, 1, 2}), DataError);
    CHECK_THROWS_AS(RankedData(2, 2, {1, 3, 1, 2}), DataError);
}

TEST_CASE("exceedance rows mark the top-level ranks") {
    const auto ranks = oracle::random_ranks(50, 3, 17);
    const RankedData rd = oracle::to_ranked(ranks);
    for (long level : {0L, 1L, 7L, 50L, 80L}) {
        const BitRow& row = rd.exceedance(1, level);
        long expect = 0;
        for (int i = 0; i < 50; ++i) {
            const bool hit = oracle::exceeds(ranks, i, 1, level, 50);
            expect += hit;
            CHECK(row.test(i) == hit);
        }
        CHECK(row.count() == expect);
    }
}

TEST_SUITE_END();
