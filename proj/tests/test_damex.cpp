#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "taildep/damex.hpp"

using namespace taildep;

TEST_SUITE_BEGIN("damex");

TEST_CASE("cone assignment keeps coordinates near the maximum") {
    SUBCASE("strictly below epsilon times the max is excluded") {
        const std::vector<double> v = {10.0, 10.0, 0.1};
        CHECK(assign_cone(v, 0.1) == FeatureSet::of({0, 1}));
    }
    SUBCASE("unique dominant maximum gives a singleton") {
        const std::vector<double> v = {0.2, 100.0, 0.3, 5.0};
        CHECK(assign_cone(v, 0.1) == FeatureSet::singleton(1));
    }
    SUBCASE("equal coordinates all qualify") {
        const std::vector<double> v = {5.0, 5.0, 5.0};
        CHECK(assign_cone(v, 0.99) == FeatureSet::of({0, 1, 2}));
    }
    SUBCASE("the argmax always belongs to the cone") {
        std::mt19937_64 rng(6);
        std::uniform_real_distribution<double> unif(0.5, 50.0);
        for (int t = 0; t < 100; ++t) {
            std::vector<double> v(5);
            int argmax = 0;
            for (int j = 0; j < 5; ++j) {
                v[static_cast<std::size_t>(j)] = unif(rng);
                if (v[static_cast<std::size_t>(j)] >
                    v[static_cast<std::size_t>(argmax)])
                    argmax = j;
            }
            const FeatureSet cone = assign_cone(v, 0.37);
            CHECK(cone.contains(argmax));
            CHECK_FALSE(cone.empty());
        }
    }
}

TEST_CASE("comonotone data put all extreme rows in one full cone") {
    const int n = 40, d = 3;
    oracle::RankMatrix m(static_cast<std::size_t>(d),
                         std::vector<std::int32_t>(static_cast<std::size_t>(n)));
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(j)][i] = i + 1;
    const RankedData rd = oracle::to_ranked(m);
    DamexConfig cfg;
    cfg.epsilon = 0.1;
    cfg.top_k_subsets = 80;
    cfg.p = TailParams{8};

    const auto cones = damex_run(rd, cfg);
    REQUIRE(cones.size() == 1);  // fewer nonempty cones than requested
    CHECK(cones[0].features == FeatureSet::of({0, 1, 2}));
    CHECK(cones[0].mass == doctest::Approx(1.0));  // 8 extreme rows / k
}

TEST_CASE("masses are counts over k and sum to the extreme-row share") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto ranks = oracle::random_ranks(60, 4, 700 + seed);
        const RankedData rd = oracle::to_ranked(ranks);
        DamexConfig cfg;
        cfg.p = TailParams{9};
        cfg.top_k_subsets = 1000;  // keep everything

        long extreme_rows = 0;
        for (int i = 0; i < 60; ++i) {
            bool any = false;
            for (int j = 0; j < 4; ++j)
                any = any || oracle::exceeds(ranks, i, j, cfg.p.k, 60);
            extreme_rows += any;
        }

        const auto cones = damex_run(rd, cfg);
        double total = 0.0;
        for (const auto& c : cones) total += c.mass;
        CHECK(total == doctest::Approx(static_cast<double>(extreme_rows) /
                                       cfg.p.k));

        // Truncation only shortens the list, keeping the heaviest cones.
        DamexConfig top2 = cfg;
        top2.top_k_subsets = 2;
        const auto head = damex_run(rd, top2);
        REQUIRE(head.size() == std::min<std::size_t>(2, cones.size()));
        for (std::size_t i = 0; i < head.size(); ++i) {
            CHECK(head[i].features == cones[i].features);
            CHECK(head[i].mass == cones[i].mass);
        }
    }
}

TEST_CASE("ordering is by mass, then lexicographic") {
    // Two columns with disjoint top-3s produce two singleton cones of
    // equal mass.
    const int n = 12;
    oracle::RankMatrix m(2, std::vector<std::int32_t>(n));
    for (int i = 0; i < n; ++i) {
        m[0][i] = i + 1;
        m[1][i] = n - i;
    }
    const RankedData rd = oracle::to_ranked(m);
    DamexConfig cfg;
    cfg.epsilon = 0.5;  // the opposite coordinate falls below the cut
    cfg.p = TailParams{3};
    cfg.top_k_subsets = 10;
    const auto cones = damex_run(rd, cfg);
    REQUIRE(cones.size() == 2);
    CHECK(cones[0].mass == cones[1].mass);
    CHECK(cones[0].features == FeatureSet::singleton(0));
    CHECK(cones[1].features == FeatureSet::singleton(1));
}

TEST_CASE("cone masses are independent of the worker count") {
    const auto ranks = oracle::random_ranks(200, 5, 808);
    const RankedData rd = oracle::to_ranked(ranks);
    DamexConfig cfg;
    cfg.p = TailParams{20};
    cfg.top_k_subsets = 50;
    const auto serial = damex_run(rd, cfg, 1);
    const auto parallel = damex_run(rd, cfg, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].features == parallel[i].features);
        CHECK(serial[i].mass == parallel[i].mass);
    }
}

TEST_CASE("config validation") {
    DamexConfig cfg;
    cfg.p = TailParams{3};
    cfg.epsilon = 0.0;
    const RankedData rd = oracle::to_ranked(oracle::random_ranks(10, 2, 1));
    CHECK_THROWS_AS(damex_run(rd, cfg), ConfigError);
    cfg.epsilon = 0.1;
    cfg.top_k_subsets = 0;
    CHECK_THROWS_AS(damex_run(rd, cfg), ConfigError);
}

TEST_SUITE_END();
