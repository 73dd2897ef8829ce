#include "taildep/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <unordered_set>

#include "taildep/parallel.hpp"

namespace taildep {

Metrics score(const std::vector<FeatureSet>& found,
              const std::vector<FeatureSet>& truth) {
    std::unordered_set<FeatureSet, FeatureSetHash> truth_set(truth.begin(),
                                                             truth.end());
    Metrics m;
    for (const FeatureSet& alpha : found) {
        if (truth_set.count(alpha)) {
            ++m.recovered;
            continue;
        }
        bool is_subset = false;
        bool is_superset = false;
        for (const FeatureSet& beta : truth) {
            if (alpha.is_proper_subset_of(beta)) is_subset = true;
            if (beta.is_proper_subset_of(alpha)) is_superset = true;
        }
        // Subset takes precedence; both cannot hold when the truth is an
        // antichain.
        if (is_subset)
            ++m.subset_errors;
        else if (is_superset)
            ++m.superset_errors;
        else
            ++m.other_errors;
    }
    return m;
}

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::kClef: return "clef";
        case Algorithm::kAsymptotic: return "asymptotic";
        case Algorithm::kPeng: return "peng";
        case Algorithm::kHill: return "hill";
        case Algorithm::kDamex: return "damex";
    }
    return "unknown";
}

std::string algorithm_label(Algorithm a) {
    switch (a) {
        case Algorithm::kClef: return "CLEF";
        case Algorithm::kAsymptotic: return "CLEF-asymptotic";
        case Algorithm::kPeng: return "CLEF-Peng";
        case Algorithm::kHill: return "CLEF-Hill";
        case Algorithm::kDamex: return "DAMEX";
    }
    return "unknown";
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "clef") return Algorithm::kClef;
    if (name == "asymptotic") return Algorithm::kAsymptotic;
    if (name == "peng") return Algorithm::kPeng;
    if (name == "hill") return Algorithm::kHill;
    if (name == "damex") return Algorithm::kDamex;
    throw ConfigError("unknown algorithm '" + name +
                      "' (expected clef, asymptotic, peng, hill or damex)");
}

void ExperimentConfig::validate() const {
    if (n < 2) throw ConfigError("n must be >= 2");
    if (!(k_over_n > 0.0 && k_over_n < 1.0))
        throw ConfigError("k_over_n must lie in (0, 1)");
    if (replications < 1) throw ConfigError("replications must be >= 1");
    if (algorithms.empty()) throw ConfigError("no algorithms selected");
    const int kk = k();
    if (kk < 1 || kk > n - 1)
        throw ConfigError("k = round(n * k_over_n) = " + std::to_string(kk) +
                          " out of range for n = " + std::to_string(n));
    test_config().validate();
}

int ExperimentConfig::k() const {
    return static_cast<int>(std::lround(static_cast<double>(n) * k_over_n));
}

TestConfig ExperimentConfig::test_config() const {
    TestConfig t;
    t.delta = delta;
    t.kappa_min = kappa_min;
    t.clef_c = clef_c;
    t.rho_guard = rho_guard;
    return t;
}

std::vector<FeatureSet> run_algorithm(Algorithm algorithm,
                                      const RankedData& rd,
                                      const ExperimentConfig& cfg) {
    const TailParams p{cfg.k()};
    if (algorithm == Algorithm::kDamex) {
        DamexConfig dc;
        dc.epsilon = cfg.damex_epsilon;
        dc.top_k_subsets = cfg.K;  // retain as many cones as planted sets
        dc.p = p;
        std::vector<FeatureSet> found;
        for (const ConeMass& cone : damex_run(rd, dc))
            found.push_back(cone.features);
        return found;
    }
    CriterionKind kind;
    switch (algorithm) {
        case Algorithm::kClef: kind = CriterionKind::kClef; break;
        case Algorithm::kAsymptotic: kind = CriterionKind::kAsymptotic; break;
        case Algorithm::kPeng: kind = CriterionKind::kPeng; break;
        default: kind = CriterionKind::kHill; break;
    }
    // Replications already run concurrently; keep the inner search serial.
    return run_clef(rd, p, cfg.test_config(), kind, 1).maximal;
}

BenchmarkReport run_benchmark(const ExperimentConfig& cfg) {
    cfg.validate();
    BenchmarkReport report;
    report.config = cfg;
    report.replications.resize(static_cast<std::size_t>(cfg.replications));

    StructureGenConfig sc;
    sc.d = cfg.d;
    sc.K = cfg.K;
    sc.min_size = cfg.min_size;
    sc.max_size = cfg.max_size;
    sc.geom_p = cfg.geom_p;

    parallel_for(cfg.replications, cfg.threads, [&](int r) {
        ReplicationResult& row =
            report.replications[static_cast<std::size_t>(r)];
        row.replication = r;
        try {
            const RngStream stream(cfg.base_seed,
                                   static_cast<std::uint64_t>(r));
            const SimulatedBenchmark sim =
                simulate_benchmark(cfg.n, sc, cfg.w, stream, 1);
            const RankedData rd = compute_ranks(sim.data);
            for (Algorithm a : cfg.algorithms)
                row.results[a] =
                    score(run_algorithm(a, rd, cfg), sim.truth.subsets);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    });

    report.summary = summarize(report.replications, cfg.algorithms);
    return report;
}

namespace {

MeanSd mean_sd(const std::vector<double>& xs) {
    MeanSd out;
    if (xs.empty()) return out;
    double sum = 0.0;
    for (double x : xs) sum += x;
    out.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - out.mean) * (x - out.mean);
        out.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return out;
}

}  // namespace

std::map<Algorithm, MetricsSummary> summarize(
    const std::vector<ReplicationResult>& rows,
    const std::vector<Algorithm>& algorithms) {
    std::map<Algorithm, MetricsSummary> out;
    for (Algorithm a : algorithms) {
        std::vector<double> rec, sub, sup, oth;
        for (const ReplicationResult& row : rows) {
            if (row.error) continue;
            const auto it = row.results.find(a);
            if (it == row.results.end()) continue;
            rec.push_back(it->second.recovered);
            sub.push_back(it->second.subset_errors);
            sup.push_back(it->second.superset_errors);
            oth.push_back(it->second.other_errors);
        }
        MetricsSummary s;
        s.recovered = mean_sd(rec);
        s.subset_errors = mean_sd(sub);
        s.superset_errors = mean_sd(sup);
        s.other_errors = mean_sd(oth);
        out.emplace(a, s);
    }
    return out;
}

std::string format_table(const BenchmarkReport& report) {
    std::ostringstream os;
    auto cell = [](const MeanSd& m) {
        std::ostringstream c;
        c << std::fixed << std::setprecision(2) << m.mean << " ("
          << std::setprecision(2) << m.sd << ")";
        return c.str();
    };

    os << std::left << std::setw(18) << "algorithm" << std::setw(8) << "k/n"
       << std::setw(16) << "recovered" << std::setw(16) << "subset errors"
       << std::setw(17) << "superset errors" << "other errors\n";
    for (Algorithm a : report.config.algorithms) {
        const auto it = report.summary.find(a);
        if (it == report.summary.end()) continue;
        const MetricsSummary& s = it->second;
        std::ostringstream kn;
        kn << std::setprecision(4) << report.config.k_over_n;
        os << std::left << std::setw(18) << algorithm_label(a) << std::setw(8)
           << kn.str() << std::setw(16) << cell(s.recovered) << std::setw(16)
           << cell(s.subset_errors) << std::setw(17)
           << cell(s.superset_errors) << cell(s.other_errors) << "\n";
    }
    int failures = 0;
    for (const ReplicationResult& row : report.replications)
        if (row.error) ++failures;
    if (failures > 0)
        os << "(" << failures << " of " << report.replications.size()
           << " replications failed; see the JSON report)\n";
    return os.str();
}

}  // namespace taildep
