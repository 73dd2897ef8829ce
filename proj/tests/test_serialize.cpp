#include <doctest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "taildep/clef.hpp"
#include "taildep/experiments.hpp"
#include "taildep/serialize.hpp"
#include "taildep/simulation.hpp"

using namespace taildep;
using ordered_json = nlohmann::ordered_json;

TEST_SUITE_BEGIN("serialize");

namespace {

DiscoveryReport small_report() {
    oracle::RankMatrix m(2, std::vector<std::int32_t>(20));
    for (int i = 0; i < 20; ++i) m[0][i] = m[1][i] = i + 1;
    const RankedData rd = oracle::to_ranked(m);
    return run_clef(rd, TailParams{5}, TestConfig{}, CriterionKind::kClef);
}

}  // namespace

TEST_CASE("discovery reports round trip through JSON") {
    const DiscoveryReport report = small_report();
    const std::string text = discovery_report_json(report);

    const auto family = family_from_json(text);
    CHECK(family == report.maximal);

    const ordered_json j = ordered_json::parse(text);
    CHECK(j.at("criterion") == "clef");
    CHECK(j.at("params").at("k") == 5);
    CHECK(j.at("levels").contains("2"));
    REQUIRE(j.at("verdicts").size() == 1);
    const auto& v = j.at("verdicts")[0];
    CHECK(v.at("features") == ordered_json::array({1, 2}));
    CHECK(v.at("keep") == true);
    CHECK(v.at("guard") == "none");
    // The original rule reports no variance: sigma is null.
    CHECK(v.at("sigma_hat").is_null());
}

TEST_CASE("scores recomputed from a written report match in-process ones") {
    const DiscoveryReport report = small_report();
    const std::vector<FeatureSet> truth = {FeatureSet::of({0, 1})};

    const Metrics in_process = score(report.maximal, truth);
    const Metrics from_json =
        score(family_from_json(discovery_report_json(report)), truth);
    CHECK(in_process.recovered == from_json.recovered);
    CHECK(in_process.subset_errors == from_json.subset_errors);
    CHECK(in_process.superset_errors == from_json.superset_errors);
    CHECK(in_process.other_errors == from_json.other_errors);

    const std::string mj = metrics_json(in_process);
    const ordered_json pj = ordered_json::parse(mj);
    CHECK(pj.at("recovered") == 1);
}

TEST_CASE("structures round trip with 1-based indices") {
    StructureGenConfig cfg;
    cfg.d = 15;
    cfg.K = 4;
    cfg.max_size = 5;
    std::mt19937_64 rng(3);
    DependenceStructure s = generate_structure(cfg, rng);
    s.w = 0.1;

    const std::string text = structure_json(s, cfg, 77);
    const DependenceStructure back = structure_from_json(text);
    CHECK(back.d == s.d);
    CHECK(back.w == s.w);
    CHECK(back.subsets == s.subsets);

    const ordered_json j = ordered_json::parse(text);
    CHECK(j.at("seed") == 77);
    for (const auto& arr : j.at("subsets"))
        for (const auto& idx : arr) {
            CHECK(idx.get<int>() >= 1);
            CHECK(idx.get<int>() <= 15);
        }
}

TEST_CASE("family extraction understands all three shapes") {
    CHECK(family_from_json(R"({"maximal": [[1,2],[3]]})") ==
          std::vector<FeatureSet>{FeatureSet::of({0, 1}),
                                  FeatureSet::singleton(2)});
    CHECK(family_from_json(
              R"({"cones": [{"features": [2,4], "mass": 0.5}]})") ==
          std::vector<FeatureSet>{FeatureSet::of({1, 3})});
    CHECK(family_from_json(R"({"subsets": [[5]]})") ==
          std::vector<FeatureSet>{FeatureSet::singleton(4)});
    CHECK_THROWS_AS(family_from_json(R"({"foo": 1})"), DataError);
}

TEST_CASE("benchmark reports serialize their summary") {
    ExperimentConfig cfg;
    cfg.n = 3000;
    cfg.d = 8;
    cfg.K = 2;
    cfg.max_size = 3;
    cfg.k_over_n = 0.01;
    cfg.algorithms = {Algorithm::kHill};
    cfg.replications = 2;
    cfg.threads = 1;
    const BenchmarkReport report = run_benchmark(cfg);
    const ordered_json j = ordered_json::parse(benchmark_report_json(report));
    CHECK(j.at("config").at("k") == 30);
    CHECK(j.at("replications").size() == 2);
    CHECK(j.at("summary").contains("hill"));
    CHECK(j.at("summary").at("hill").at("recovered").contains("mean"));

    // Aggregation matches a recomputation from the serialized rows.
    double mean = 0.0;
    for (const auto& row : j.at("replications"))
        mean += row.at("results").at("hill").at("recovered").get<double>();
    mean /= 2.0;
    CHECK(j.at("summary").at("hill").at("recovered").at("mean").get<double>() ==
          doctest::Approx(mean).epsilon(1e-12));
}

TEST_SUITE_END();
