#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "taildep/clef.hpp"
#include "taildep/damex.hpp"
#include "taildep/simulation.hpp"

namespace taildep {

// How one discovered family compares to the planted one. The four
// categories partition the discovered family.
struct Metrics {
    int recovered = 0;        // exact matches with the truth
    int subset_errors = 0;    // proper subsets of some true set
    int superset_errors = 0;  // proper supersets of some true set
    int other_errors = 0;     // everything else
};

Metrics score(const std::vector<FeatureSet>& found,
              const std::vector<FeatureSet>& truth);

enum class Algorithm { kClef, kAsymptotic, kPeng, kHill, kDamex };

std::string algorithm_name(Algorithm a);        // "clef", ..., "damex"
std::string algorithm_label(Algorithm a);       // "CLEF", "CLEF-Hill", ...
Algorithm algorithm_from_name(const std::string& name);

struct ExperimentConfig {
    // Simulation
    int n = 50000;
    int d = 100;
    int K = 80;
    double w = 0.1;
    double geom_p = 0.25;
    int min_size = 2;
    int max_size = 8;
    // Estimation
    double k_over_n = 0.005;
    double delta = 0.001;
    double kappa_min = 0.08;
    double clef_c = 0.05;
    double rho_guard = 0.05;
    double damex_epsilon = 0.1;
    // Harness
    std::vector<Algorithm> algorithms = {Algorithm::kClef,
                                         Algorithm::kAsymptotic,
                                         Algorithm::kPeng, Algorithm::kHill,
                                         Algorithm::kDamex};
    int replications = 50;
    std::uint64_t base_seed = 1;
    int threads = 0;

    void validate() const;
    int k() const;  // round(n * k_over_n)
    TestConfig test_config() const;
};

struct ReplicationResult {
    int replication = 0;
    std::map<Algorithm, Metrics> results;
    std::optional<std::string> error;  // recorded, not fatal
};

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;  // sample standard deviation (n-1 denominator)
};

struct MetricsSummary {
    MeanSd recovered, subset_errors, superset_errors, other_errors;
};

struct BenchmarkReport {
    ExperimentConfig config;
    std::vector<ReplicationResult> replications;
    std::map<Algorithm, MetricsSummary> summary;
};

// Runs the discovery algorithm on ranked data and returns the family to
// score: the maximal family for the CLEF variants, the top-K cones for
// DAMEX.
std::vector<FeatureSet> run_algorithm(Algorithm algorithm,
                                      const RankedData& rd,
                                      const ExperimentConfig& cfg);

// Simulate / discover / score over all replications; replication r uses
// RNG stream r, so any single row of the report can be reproduced alone.
BenchmarkReport run_benchmark(const ExperimentConfig& cfg);

// Recomputes the per-algorithm summary from the replication rows.
std::map<Algorithm, MetricsSummary> summarize(
    const std::vector<ReplicationResult>& rows,
    const std::vector<Algorithm>& algorithms);

// Aligned plain-text table: one row per algorithm with mean (sd) cells.
std::string format_table(const BenchmarkReport& report);

}  // namespace taildep
