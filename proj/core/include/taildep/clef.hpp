#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "taildep/estimators.hpp"
#include "taildep/feature_set.hpp"
#include "taildep/ranked_data.hpp"

namespace taildep {

// Which keep/stop test drives the lattice search.
enum class CriterionKind {
    kClef,        // original rule: kappa-hat >= C
    kAsymptotic,  // kappa test at level delta
    kPeng,        // Peng eta test with guards
    kHill,        // Hill eta test with the zero-rho guard
};

std::string criterion_name(CriterionKind kind);
CriterionKind criterion_from_name(const std::string& name);

// All surviving subsets of one cardinality, sorted lexicographically.
struct LevelFamily {
    int level = 0;
    std::vector<FeatureSet> sets;
};

// Candidates of size prev.level + 1: exactly the sets whose every
// one-smaller subset survives in prev. Join-and-prune; output sorted
// lexicographically, deduplicated.
std::vector<FeatureSet> generate_candidates(const LevelFamily& prev);

struct DiscoveryReport {
    int n = 0;
    int d = 0;
    CriterionKind criterion = CriterionKind::kHill;
    TailParams params;
    TestConfig config;
    // Families A_1 (all singletons) through A_S; search stops at the
    // first empty level.
    std::map<int, LevelFamily> levels;
    // Inclusion-maximal members of the union of levels >= 2.
    std::vector<FeatureSet> maximal;
    // One verdict per tested candidate, ordered by (level, set).
    std::vector<CriterionVerdict> verdicts;
};

// Evaluates one candidate under the chosen criterion.
CriterionVerdict evaluate_criterion(const RankedData& rd,
                                    const FeatureSet& alpha,
                                    const TailParams& p, const TestConfig& cfg,
                                    CriterionKind kind);

// Called once per completed level with (level, candidate count, kept).
using LevelObserver = std::function<void(int, std::size_t, std::size_t)>;

// Stage 1: bottom-up Apriori sweep. Verdicts for every evaluated
// candidate are appended to `verdicts`. Criterion evaluations within one
// level run on `threads` workers.
std::map<int, LevelFamily> clef_stage1(const RankedData& rd,
                                       const TailParams& p,
                                       const TestConfig& cfg,
                                       CriterionKind kind,
                                       std::vector<CriterionVerdict>& verdicts,
                                       int threads = 0,
                                       const LevelObserver& observer = {});

// Stage 2: keep the inclusion-maximal sets among levels >= 2.
std::vector<FeatureSet> prune_maximal(
    const std::map<int, LevelFamily>& levels);

// Both stages plus the full verdict ledger.
DiscoveryReport run_clef(const RankedData& rd, const TailParams& p,
                         const TestConfig& cfg, CriterionKind kind,
                         int threads = 0, const LevelObserver& observer = {});

}  // namespace taildep
