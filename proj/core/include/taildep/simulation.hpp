#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "taildep/data_matrix.hpp"
#include "taildep/feature_set.hpp"

namespace taildep {

// Reproducible RNG streams: the same (seed, stream_id, substream) always
// yields the same engine, so rows and replications can be generated in
// any order or in parallel without changing the output.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_id_(stream_id) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    std::mt19937_64 engine(std::uint64_t substream) const;

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
};

// Positive stable variate with Laplace transform E exp(-tS) = exp(-t^w),
// 0 < w < 1; w = 1 degenerates to S = 1.
double sample_positive_stable(double w, std::mt19937_64& rng);

// Symmetric logistic vector with unit Frechet margins and joint CDF
// exp{ -(sum_j z_j^(-1/w))^w }: one shared stable amplitude, independent
// exponentials.
std::vector<double> sample_symmetric_logistic(int dim, double w,
                                              std::mt19937_64& rng);

// The planted family of dependent subsets.
struct DependenceStructure {
    int d = 0;
    std::vector<FeatureSet> subsets;
    double w = 0.1;

    // No nesting, pairwise intersections of at most two features, sizes
    // within bounds. Throws on violation.
    void validate(int min_size, int max_size) const;
};

struct StructureGenConfig {
    int d = 100;
    int K = 80;
    int min_size = 2;
    int max_size = 8;
    double geom_p = 0.25;     // truncated-geometric size parameter
    int max_attempts = 10000; // rejection budget per subset

    void validate() const;
};

// K random subsets with truncated-geometric sizes, rejection-sampled to
// satisfy the no-nesting and intersection <= 2 constraints.
DependenceStructure generate_structure(const StructureGenConfig& cfg,
                                       std::mt19937_64& rng);

// Per-observation noisy enlargement: each subset gains one uniformly
// chosen feature from its complement.
std::vector<FeatureSet> perturb_noisy(const DependenceStructure& structure,
                                      std::mt19937_64& rng);

// One observation of the asymmetric logistic model built from the given
// per-row subsets: feature j takes the maximum of its block contributions
// weighted by 1/(number of blocks containing j); uncovered features are
// independent unit Frechet.
void sample_asym_logistic_row(const std::vector<FeatureSet>& row_subsets,
                              int d, double w, std::mt19937_64& rng,
                              std::vector<double>& out);

struct SimulatedBenchmark {
    DataMatrix data;
    DependenceStructure truth;
};

// n observations of the noisy asymmetric logistic model plus the planted
// ground truth. Fully determined by `stream`; row generation may be
// parallelized without affecting the output.
SimulatedBenchmark simulate_benchmark(int n, const StructureGenConfig& cfg,
                                      double w, const RngStream& stream,
                                      int threads = 0);

}  // namespace taildep
