#include "taildep/serialize.hpp"

#include <cmath>

#include <json.hpp>

namespace taildep {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json indices_1based(const FeatureSet& s) {
    ordered_json arr = ordered_json::array();
    s.for_each([&](int j) { arr.push_back(j + 1); });
    return arr;
}

FeatureSet set_from_indices(const ordered_json& arr) {
    FeatureSet s;
    for (const auto& v : arr) {
        const int j = v.get<int>();
        if (j < 1) throw DataError("feature indices must be >= 1");
        s.add(j - 1);
    }
    return s;
}

ordered_json real_or_null(double v) {
    if (std::isnan(v) || std::isinf(v)) return nullptr;
    return v;
}

ordered_json metrics_to_json(const Metrics& m) {
    ordered_json j;
    j["recovered"] = m.recovered;
    j["subset_errors"] = m.subset_errors;
    j["superset_errors"] = m.superset_errors;
    j["other_errors"] = m.other_errors;
    return j;
}

}  // namespace

std::string discovery_report_json(const DiscoveryReport& report) {
    ordered_json j;
    j["criterion"] = criterion_name(report.criterion);
    j["n"] = report.n;
    j["d"] = report.d;
    ordered_json params;
    params["k"] = report.params.k;
    params["delta"] = report.config.delta;
    params["kappa_min"] = report.config.kappa_min;
    params["clef_c"] = report.config.clef_c;
    params["rho_guard"] = report.config.rho_guard;
    params["fd_exponent"] = report.config.fd_exponent;
    j["params"] = params;

    ordered_json levels = ordered_json::object();
    for (const auto& [level, family] : report.levels) {
        if (level < 2) continue;
        ordered_json arr = ordered_json::array();
        for (const FeatureSet& s : family.sets) arr.push_back(indices_1based(s));
        levels[std::to_string(level)] = arr;
    }
    j["levels"] = levels;

    ordered_json maximal = ordered_json::array();
    for (const FeatureSet& s : report.maximal)
        maximal.push_back(indices_1based(s));
    j["maximal"] = maximal;

    ordered_json verdicts = ordered_json::array();
    for (const CriterionVerdict& v : report.verdicts) {
        ordered_json jv;
        jv["features"] = indices_1based(v.alpha);
        jv["level"] = v.alpha.size();
        jv["statistic"] = real_or_null(v.statistic);
        jv["sigma_hat"] = v.sigma_defined ? real_or_null(v.sigma_hat)
                                          : ordered_json(nullptr);
        jv["threshold"] = real_or_null(v.threshold);
        jv["keep"] = v.keep;
        jv["guard"] = guard_name(v.guard);
        jv["variance_clamped"] = v.variance_clamped;
        verdicts.push_back(jv);
    }
    j["verdicts"] = verdicts;
    return j.dump(2) + "\n";
}

std::string cone_masses_json(const std::vector<ConeMass>& cones,
                             const DamexConfig& cfg) {
    ordered_json j;
    j["k"] = cfg.p.k;
    j["epsilon"] = cfg.epsilon;
    j["top_k_subsets"] = cfg.top_k_subsets;
    ordered_json arr = ordered_json::array();
    for (const ConeMass& c : cones) {
        ordered_json jc;
        jc["features"] = indices_1based(c.features);
        jc["mass"] = c.mass;
        arr.push_back(jc);
    }
    j["cones"] = arr;
    return j.dump(2) + "\n";
}

std::string structure_json(const DependenceStructure& structure,
                           const StructureGenConfig& cfg,
                           std::uint64_t seed) {
    ordered_json j;
    j["d"] = structure.d;
    j["w"] = structure.w;
    j["seed"] = seed;
    ordered_json config;
    config["K"] = cfg.K;
    config["min_size"] = cfg.min_size;
    config["max_size"] = cfg.max_size;
    config["geom_p"] = cfg.geom_p;
    j["config"] = config;
    ordered_json arr = ordered_json::array();
    for (const FeatureSet& s : structure.subsets)
        arr.push_back(indices_1based(s));
    j["subsets"] = arr;
    return j.dump(2) + "\n";
}

DependenceStructure structure_from_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    DependenceStructure out;
    out.d = j.at("d").get<int>();
    out.w = j.value("w", 0.1);
    for (const auto& arr : j.at("subsets"))
        out.subsets.push_back(set_from_indices(arr));
    return out;
}

std::string metrics_json(const Metrics& metrics) {
    return metrics_to_json(metrics).dump(2) + "\n";
}

std::string benchmark_report_json(const BenchmarkReport& report) {
    const ExperimentConfig& cfg = report.config;
    ordered_json j;
    ordered_json config;
    config["n"] = cfg.n;
    config["d"] = cfg.d;
    config["K"] = cfg.K;
    config["w"] = cfg.w;
    config["geom_p"] = cfg.geom_p;
    config["min_size"] = cfg.min_size;
    config["max_size"] = cfg.max_size;
    config["k_over_n"] = cfg.k_over_n;
    config["k"] = cfg.k();
    config["delta"] = cfg.delta;
    config["kappa_min"] = cfg.kappa_min;
    config["clef_c"] = cfg.clef_c;
    config["rho_guard"] = cfg.rho_guard;
    config["damex_epsilon"] = cfg.damex_epsilon;
    config["replications"] = cfg.replications;
    config["base_seed"] = cfg.base_seed;
    ordered_json algs = ordered_json::array();
    for (Algorithm a : cfg.algorithms) algs.push_back(algorithm_name(a));
    config["algorithms"] = algs;
    j["config"] = config;

    ordered_json reps = ordered_json::array();
    for (const ReplicationResult& row : report.replications) {
        ordered_json jr;
        jr["replication"] = row.replication;
        if (row.error) {
            jr["error"] = *row.error;
        } else {
            ordered_json results;
            for (const auto& [a, m] : row.results)
                results[algorithm_name(a)] = metrics_to_json(m);
            jr["results"] = results;
        }
        reps.push_back(jr);
    }
    j["replications"] = reps;

    ordered_json summary;
    auto mean_sd = [](const MeanSd& m) {
        ordered_json s;
        s["mean"] = m.mean;
        s["sd"] = m.sd;
        return s;
    };
    for (const auto& [a, s] : report.summary) {
        ordered_json js;
        js["recovered"] = mean_sd(s.recovered);
        js["subset_errors"] = mean_sd(s.subset_errors);
        js["superset_errors"] = mean_sd(s.superset_errors);
        js["other_errors"] = mean_sd(s.other_errors);
        summary[algorithm_name(a)] = js;
    }
    j["summary"] = summary;
    return j.dump(2) + "\n";
}

std::vector<FeatureSet> family_from_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    std::vector<FeatureSet> out;
    if (j.contains("maximal")) {
        for (const auto& arr : j.at("maximal"))
            out.push_back(set_from_indices(arr));
    } else if (j.contains("cones")) {
        for (const auto& cone : j.at("cones"))
            out.push_back(set_from_indices(cone.at("features")));
    } else if (j.contains("subsets")) {
        for (const auto& arr : j.at("subsets"))
            out.push_back(set_from_indices(arr));
    } else {
        throw DataError(
            "no 'maximal', 'cones' or 'subsets' array in JSON input");
    }
    return out;
}

}  // namespace taildep
