#pragma once

#include <span>
#include <vector>

#include "taildep/feature_set.hpp"
#include "taildep/ranked_data.hpp"

namespace taildep {

struct DamexConfig {
    double epsilon = 0.1;    // cone thickening parameter
    int top_k_subsets = 80;  // how many cones to return
    TailParams p;

    void validate() const;
};

struct ConeMass {
    FeatureSet features;
    double mass = 0.0;
};

// Cone of a Pareto-scale observation: the coordinates within a factor
// epsilon of the largest one. Never empty (the argmax always qualifies).
FeatureSet assign_cone(std::span<const double> v, double epsilon);

// Assigns every row with some rank in the top k to a cone and returns the
// top_k_subsets cones by empirical mass (count / k), ties broken
// lexicographically by feature set. Row assignment runs on `threads`
// workers with per-worker partial maps merged once.
std::vector<ConeMass> damex_run(const RankedData& rd, const DamexConfig& cfg,
                                int threads = 1);

}  // namespace taildep
