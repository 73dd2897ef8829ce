#include "taildep/simulation.hpp"

#include <algorithm>
#include <cmath>

#include "taildep/parallel.hpp"

namespace taildep {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace

std::mt19937_64 RngStream::engine(std::uint64_t substream) const {
    std::uint64_t state = splitmix64(seed_);
    state = splitmix64(state ^ (stream_id_ + 0x632be59bd9b4e019ull));
    state = splitmix64(state ^ (substream + 0x2545f4914f6cdd1dull));
    return std::mt19937_64(state);
}

double sample_positive_stable(double w, std::mt19937_64& rng) {
    if (!(w > 0.0 && w <= 1.0))
        throw ConfigError("stable exponent w must lie in (0, 1]");
    if (w == 1.0) return 1.0;

    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::exponential_distribution<double> exp1(1.0);
    // Avoid the degenerate endpoints U in {0, pi}.
    double u;
    do {
        u = kPi * unif(rng);
    } while (u <= 0.0 || u >= kPi);
    double e;
    do {
        e = exp1(rng);
    } while (e <= 0.0);

    const double a = std::sin((1.0 - w) * u) / e;
    return std::pow(a, (1.0 - w) / w) * std::sin(w * u) /
           std::pow(std::sin(u), 1.0 / w);
}

std::vector<double> sample_symmetric_logistic(int dim, double w,
                                              std::mt19937_64& rng) {
    if (dim < 1) throw ConfigError("dimension must be >= 1");
    const double s = sample_positive_stable(w, rng);
    std::exponential_distribution<double> exp1(1.0);
    std::vector<double> z(static_cast<std::size_t>(dim));
    for (double& zj : z) {
        double e;
        do {
            e = exp1(rng);
        } while (e <= 0.0);
        zj = std::pow(s / e, w);
    }
    return z;
}

void DependenceStructure::validate(int min_size, int max_size) const {
    for (std::size_t a = 0; a < subsets.size(); ++a) {
        const int size = subsets[a].size();
        if (size < min_size || size > max_size)
            throw ConfigError("subset size " + std::to_string(size) +
                              " outside [" + std::to_string(min_size) + ", " +
                              std::to_string(max_size) + "]");
        for (std::size_t b = 0; b < subsets.size(); ++b) {
            if (a == b) continue;
            if (subsets[a].is_subset_of(subsets[b]))
                throw ConfigError("nested subsets in structure");
            if (a < b && subsets[a].intersection_size(subsets[b]) > 2)
                throw ConfigError("subsets share more than two features");
        }
    }
}

void StructureGenConfig::validate() const {
    if (d < 2) throw ConfigError("d must be >= 2");
    if (K < 1) throw ConfigError("K must be >= 1");
    if (min_size < 2) throw ConfigError("min_size must be >= 2");
    if (max_size < min_size || max_size > d)
        throw ConfigError("need min_size <= max_size <= d");
    if (!(geom_p > 0.0 && geom_p < 1.0))
        throw ConfigError("geom_p must lie in (0, 1)");
    if (max_attempts < 1) throw ConfigError("max_attempts must be >= 1");
}

namespace {

int draw_truncated_geometric(int lo, int hi, double p, std::mt19937_64& rng) {
    // P(size = s) proportional to (1-p)^(s-lo) on {lo, ..., hi}.
    std::vector<double> weights;
    weights.reserve(static_cast<std::size_t>(hi - lo + 1));
    double wgt = 1.0;
    for (int s = lo; s <= hi; ++s) {
        weights.push_back(wgt);
        wgt *= 1.0 - p;
    }
    std::discrete_distribution<int> dist(weights.begin(), weights.end());
    return lo + dist(rng);
}

FeatureSet draw_subset(int d, int size, std::mt19937_64& rng) {
    // Floyd's algorithm for a uniform size-subset of {0, ..., d-1}.
    FeatureSet s;
    for (int j = d - size; j < d; ++j) {
        std::uniform_int_distribution<int> pick(0, j);
        const int t = pick(rng);
        if (s.contains(t))
            s.add(j);
        else
            s.add(t);
    }
    return s;
}

}  // namespace

DependenceStructure generate_structure(const StructureGenConfig& cfg,
                                       std::mt19937_64& rng) {
    cfg.validate();
    DependenceStructure out;
    out.d = cfg.d;

    for (int m = 0; m < cfg.K; ++m) {
        bool placed = false;
        for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
            const int size =
                draw_truncated_geometric(cfg.min_size, cfg.max_size,
                                         cfg.geom_p, rng);
            const FeatureSet candidate = draw_subset(cfg.d, size, rng);
            bool ok = true;
            for (const FeatureSet& existing : out.subsets) {
                if (candidate.is_subset_of(existing) ||
                    existing.is_subset_of(candidate) ||
                    candidate.intersection_size(existing) > 2) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                out.subsets.push_back(candidate);
                placed = true;
                break;
            }
        }
        if (!placed)
            throw ConfigError(
                "could not place subset " + std::to_string(m + 1) + " of " +
                std::to_string(cfg.K) + " after " +
                std::to_string(cfg.max_attempts) +
                " attempts; structure configuration looks infeasible");
    }
    return out;
}

std::vector<FeatureSet> perturb_noisy(const DependenceStructure& structure,
                                      std::mt19937_64& rng) {
    std::vector<FeatureSet> noisy;
    noisy.reserve(structure.subsets.size());
    for (const FeatureSet& alpha : structure.subsets) {
        if (alpha.size() >= structure.d)
            throw ConfigError("subset covers all features; no room for a "
                              "noisy feature");
        std::uniform_int_distribution<int> pick(0, structure.d - 1);
        int extra;
        do {
            extra = pick(rng);
        } while (alpha.contains(extra));
        noisy.push_back(alpha.with(extra));
    }
    return noisy;
}

void sample_asym_logistic_row(const std::vector<FeatureSet>& row_subsets,
                              int d, double w, std::mt19937_64& rng,
                              std::vector<double>& out) {
    out.assign(static_cast<std::size_t>(d), 0.0);

    // Membership counts |A(j)| over the row's subsets.
    std::vector<int> membership(static_cast<std::size_t>(d), 0);
    for (const FeatureSet& alpha : row_subsets)
        alpha.for_each([&](int j) { ++membership[static_cast<std::size_t>(j)]; });

    for (const FeatureSet& alpha : row_subsets) {
        const std::vector<double> z =
            sample_symmetric_logistic(alpha.size(), w, rng);
        std::size_t pos = 0;
        alpha.for_each([&](int j) {
            const double weighted =
                z[pos++] / static_cast<double>(membership[static_cast<std::size_t>(j)]);
            out[static_cast<std::size_t>(j)] =
                std::max(out[static_cast<std::size_t>(j)], weighted);
        });
    }

    // Uncovered features get an independent unit Frechet draw.
    std::exponential_distribution<double> exp1(1.0);
    for (int j = 0; j < d; ++j) {
        if (membership[static_cast<std::size_t>(j)] == 0) {
            double e;
            do {
                e = exp1(rng);
            } while (e <= 0.0);
            out[static_cast<std::size_t>(j)] = 1.0 / e;
        }
    }
}

SimulatedBenchmark simulate_benchmark(int n, const StructureGenConfig& cfg,
                                      double w, const RngStream& stream,
                                      int threads) {
    if (n < 1) throw ConfigError("n must be >= 1");
    std::mt19937_64 structure_rng = stream.engine(0);
    DependenceStructure truth = generate_structure(cfg, structure_rng);
    truth.w = w;

    DataMatrix data(n, cfg.d);
    // Substream r+1 drives row r, so the output does not depend on the
    // thread count.
    parallel_for(n, threads, [&](int i) {
        std::mt19937_64 rng =
            stream.engine(static_cast<std::uint64_t>(i) + 1);
        const std::vector<FeatureSet> noisy = perturb_noisy(truth, rng);
        std::vector<double> row;
        sample_asym_logistic_row(noisy, cfg.d, w, rng, row);
        for (int j = 0; j < cfg.d; ++j)
            data(i, j) = row[static_cast<std::size_t>(j)];
    });
    return SimulatedBenchmark{std::move(data), std::move(truth)};
}

}  // namespace taildep
