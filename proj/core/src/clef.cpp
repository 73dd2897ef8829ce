#include "taildep/clef.hpp"

#include <algorithm>
#include <unordered_set>

#include "taildep/parallel.hpp"

namespace taildep {

std::string criterion_name(CriterionKind kind) {
    switch (kind) {
        case CriterionKind::kClef: return "clef";
        case CriterionKind::kAsymptotic: return "asymptotic";
        case CriterionKind::kPeng: return "peng";
        case CriterionKind::kHill: return "hill";
    }
    return "unknown";
}

CriterionKind criterion_from_name(const std::string& name) {
    if (name == "clef") return CriterionKind::kClef;
    if (name == "asymptotic") return CriterionKind::kAsymptotic;
    if (name == "peng") return CriterionKind::kPeng;
    if (name == "hill") return CriterionKind::kHill;
    throw ConfigError("unknown criterion '" + name +
                      "' (expected clef, asymptotic, peng or hill)");
}

CriterionVerdict evaluate_criterion(const RankedData& rd,
                                    const FeatureSet& alpha,
                                    const TailParams& p, const TestConfig& cfg,
                                    CriterionKind kind) {
    switch (kind) {
        case CriterionKind::kClef:
            return clef_original_criterion(rd, alpha, p, cfg);
        case CriterionKind::kAsymptotic:
            return kappa_criterion(rd, alpha, p, cfg);
        case CriterionKind::kPeng:
            return peng_criterion(rd, alpha, p, cfg);
        case CriterionKind::kHill:
            return hill_criterion(rd, alpha, p, cfg);
    }
    throw ConfigError("unknown criterion kind");
}

std::vector<FeatureSet> generate_candidates(const LevelFamily& prev) {
    std::vector<FeatureSet> out;
    if (prev.sets.size() < 2) return out;  // a join needs two survivors

    const int target = prev.level + 1;
    std::unordered_set<FeatureSet, FeatureSetHash> survivors(
        prev.sets.begin(), prev.sets.end());
    std::unordered_set<FeatureSet, FeatureSetHash> seen;

    // Join pairs sharing all but one element, then verify the full
    // downward closure.
    for (std::size_t a = 0; a < prev.sets.size(); ++a) {
        for (std::size_t b = a + 1; b < prev.sets.size(); ++b) {
            const FeatureSet joined = prev.sets[a] | prev.sets[b];
            if (joined.size() != target) continue;
            if (!seen.insert(joined).second) continue;
            bool closed = true;
            joined.for_each([&](int j) {
                if (closed && !survivors.count(joined.without(j)))
                    closed = false;
            });
            if (closed) out.push_back(joined);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<int, LevelFamily> clef_stage1(const RankedData& rd,
                                       const TailParams& p,
                                       const TestConfig& cfg,
                                       CriterionKind kind,
                                       std::vector<CriterionVerdict>& verdicts,
                                       int threads,
                                       const LevelObserver& observer) {
    p.validate(rd.n());
    cfg.validate();

    std::map<int, LevelFamily> levels;
    LevelFamily singles;
    singles.level = 1;
    for (int j = 0; j < rd.d(); ++j)
        singles.sets.push_back(FeatureSet::singleton(j));
    levels.emplace(1, singles);

    const LevelFamily* prev = &levels.at(1);
    for (int s = 2; s <= rd.d(); ++s) {
        const std::vector<FeatureSet> candidates = generate_candidates(*prev);
        if (candidates.empty()) break;

        std::vector<CriterionVerdict> level_verdicts(candidates.size());
        parallel_for(static_cast<int>(candidates.size()), threads,
                     [&](int i) {
                         level_verdicts[static_cast<std::size_t>(i)] =
                             evaluate_criterion(
                                 rd, candidates[static_cast<std::size_t>(i)],
                                 p, cfg, kind);
                     });

        LevelFamily fam;
        fam.level = s;
        for (const CriterionVerdict& v : level_verdicts)
            if (v.keep) fam.sets.push_back(v.alpha);
        verdicts.insert(verdicts.end(), level_verdicts.begin(),
                        level_verdicts.end());
        if (observer) observer(s, candidates.size(), fam.sets.size());

        if (fam.sets.empty()) break;
        prev = &levels.emplace(s, std::move(fam)).first->second;
    }
    return levels;
}

std::vector<FeatureSet> prune_maximal(
    const std::map<int, LevelFamily>& levels) {
    std::vector<FeatureSet> maximal;
    // Top-down sweep: a set survives only if no already-kept superset
    // contains it. Levels are visited from the largest cardinality down.
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        if (it->first < 2) continue;
        for (const FeatureSet& alpha : it->second.sets) {
            bool covered = false;
            for (const FeatureSet& beta : maximal) {
                if (alpha.is_proper_subset_of(beta)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) maximal.push_back(alpha);
        }
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

DiscoveryReport run_clef(const RankedData& rd, const TailParams& p,
                         const TestConfig& cfg, CriterionKind kind,
                         int threads, const LevelObserver& observer) {
    DiscoveryReport report;
    report.n = rd.n();
    report.d = rd.d();
    report.criterion = kind;
    report.params = p;
    report.config = cfg;
    report.levels =
        clef_stage1(rd, p, cfg, kind, report.verdicts, threads, observer);
    report.maximal = prune_maximal(report.levels);
    return report;
}

}  // namespace taildep
