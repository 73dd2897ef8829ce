#include "taildep/damex.hpp"

#include <algorithm>
#include <unordered_map>

#include "taildep/parallel.hpp"

namespace taildep {

void DamexConfig::validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw ConfigError("epsilon must lie in (0, 1)");
    if (top_k_subsets < 1) throw ConfigError("top_k_subsets must be >= 1");
}

FeatureSet assign_cone(std::span<const double> v, double epsilon) {
    double vmax = 0.0;
    for (double x : v) vmax = std::max(vmax, x);
    FeatureSet cone;
    const double cut = epsilon * vmax;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] >= cut) cone.add(static_cast<int>(j));
    return cone;
}

std::vector<ConeMass> damex_run(const RankedData& rd, const DamexConfig& cfg,
                                int threads) {
    cfg.validate();
    cfg.p.validate(rd.n());
    const int n = rd.n();
    const int d = rd.d();
    const int k = cfg.p.k;

    using ConeCounts = std::unordered_map<FeatureSet, long, FeatureSetHash>;
    threads = std::min(resolve_threads(threads), n);
    const int chunks = std::max(threads, 1);
    std::vector<ConeCounts> partial(static_cast<std::size_t>(chunks));

    parallel_for(chunks, threads, [&](int chunk) {
        ConeCounts& local = partial[static_cast<std::size_t>(chunk)];
        std::vector<double> v(static_cast<std::size_t>(d));
        const int lo = static_cast<int>(static_cast<long>(n) * chunk / chunks);
        const int hi =
            static_cast<int>(static_cast<long>(n) * (chunk + 1) / chunks);
        for (int i = lo; i < hi; ++i) {
            // Extremal filter: max_j V_{i,j} >= n/k, i.e. some rank in
            // the top k.
            std::int32_t max_rank = 0;
            for (int j = 0; j < d; ++j)
                max_rank = std::max(max_rank, rd.rank(i, j));
            if (max_rank < n + 1 - k) continue;
            for (int j = 0; j < d; ++j)
                v[static_cast<std::size_t>(j)] = rd.pareto(i, j);
            ++local[assign_cone(v, cfg.epsilon)];
        }
    });

    ConeCounts counts;
    for (const ConeCounts& local : partial)
        for (const auto& [features, count] : local) counts[features] += count;

    std::vector<ConeMass> cones;
    cones.reserve(counts.size());
    for (const auto& [features, count] : counts)
        cones.push_back(
            {features, static_cast<double>(count) / static_cast<double>(k)});
    std::sort(cones.begin(), cones.end(),
              [](const ConeMass& a, const ConeMass& b) {
                  if (a.mass != b.mass) return a.mass > b.mass;
                  return a.features < b.features;
              });
    if (static_cast<int>(cones.size()) > cfg.top_k_subsets)
        cones.resize(static_cast<std::size_t>(cfg.top_k_subsets));
    return cones;
}

}  // namespace taildep
