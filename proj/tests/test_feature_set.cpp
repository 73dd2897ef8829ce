#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "taildep/bit_row.hpp"
#include "taildep/feature_set.hpp"

using namespace taildep;

TEST_SUITE_BEGIN("feature_set");

TEST_CASE("cardinality is cached through mutation") {
    FeatureSet s;
    CHECK(s.empty());
    s.add(3);
    s.add(100);
    s.add(3);  // duplicate
    CHECK(s.size() == 2);
    s.remove(3);
    s.remove(3);
    CHECK(s.size() == 1);
    CHECK(s.contains(100));
    CHECK_FALSE(s.contains(3));
}

TEST_CASE("with/without do not mutate the source") {
    const FeatureSet s = FeatureSet::of({1, 5});
    const FeatureSet t = s.with(9);
    CHECK(s.size() == 2);
    CHECK(t.size() == 3);
    CHECK(s.without(5).size() == 1);
    CHECK(s.size() == 2);
}

TEST_CASE("subset and intersection queries") {
    const FeatureSet a = FeatureSet::of({1, 2, 3});
    const FeatureSet b = FeatureSet::of({1, 2, 3, 7});
    const FeatureSet c = FeatureSet::of({2, 3, 4});
    CHECK(a.is_subset_of(a));
    CHECK(a.is_subset_of(b));
    CHECK(a.is_proper_subset_of(b));
    CHECK_FALSE(b.is_subset_of(a));
    CHECK_FALSE(a.is_proper_subset_of(a));
    CHECK(a.intersection_size(c) == 2);
    CHECK((a & c) == FeatureSet::of({2, 3}));
    CHECK((a | c) == FeatureSet::of({1, 2, 3, 4}));
}

TEST_CASE("order is lexicographic on ascending index lists") {
    const FeatureSet s14 = FeatureSet::of({0, 3});
    const FeatureSet s23 = FeatureSet::of({1, 2});
    CHECK(s14 < s23);  // {1,4} before {2,3}
    CHECK(FeatureSet::of({0, 1}) < FeatureSet::of({0, 2}));
    CHECK(FeatureSet::of({0}) < FeatureSet::of({0, 1}));  // prefix first
    CHECK_FALSE(s14 < s14);

    // Comparator agrees with lexicographic comparison of index vectors.
    std::mt19937_64 rng(7);
    std::vector<FeatureSet> sets;
    for (int t = 0; t < 200; ++t) {
        FeatureSet s;
        std::uniform_int_distribution<int> nbits(1, 6), pick(0, 130);
        const int b = nbits(rng);
        for (int i = 0; i < b; ++i) s.add(pick(rng));
        sets.push_back(s);
    }
    for (const auto& a : sets) {
        for (const auto& b : sets) {
            const auto ia = a.indices(), ib = b.indices();
            CHECK((a < b) == std::lexicographical_compare(
                                 ia.begin(), ia.end(), ib.begin(), ib.end()));
        }
    }
}

TEST_CASE("indices round trip across the word boundary") {
    const std::vector<int> idx = {0, 63, 64, 127, 128, 255};
    const FeatureSet s = FeatureSet::of(idx);
    CHECK(s.indices() == idx);
    CHECK(s.to_string() == "{1,64,65,128,129,256}");
    CHECK_THROWS_AS(FeatureSet::singleton(256), DataError);
    CHECK_THROWS_AS(FeatureSet::singleton(-1), DataError);
}

TEST_CASE("bit rows count joints and unions like a row scan") {
    std::mt19937_64 rng(42);
    const int n = 173;
    std::vector<std::vector<bool>> flags(3, std::vector<bool>(n));
    std::vector<BitRow> rows(3, BitRow(n));
    std::bernoulli_distribution coin(0.3);
    for (int r = 0; r < 3; ++r)
        for (int i = 0; i < n; ++i)
            if ((flags[r][i] = coin(rng))) rows[r].set(i);

    long expect_and = 0, expect_or = 0;
    for (int i = 0; i < n; ++i) {
        expect_and += flags[0][i] && flags[1][i] && flags[2][i];
        expect_or += flags[0][i] || flags[1][i] || flags[2][i];
    }
    const std::vector<const BitRow*> ptrs = {&rows[0], &rows[1], &rows[2]};
    CHECK(BitRow::joint_count(ptrs) == expect_and);
    CHECK(BitRow::union_count(ptrs) == expect_or);
    CHECK(rows[0].and_count(rows[1]) ==
          BitRow::joint_count({&rows[0], &rows[1]}));
}

TEST_SUITE_END();
