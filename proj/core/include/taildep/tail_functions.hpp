#pragma once

#include <span>
#include <vector>

#include "taildep/feature_set.hpp"
#include "taildep/ranked_data.hpp"

namespace taildep {

// Empirical tail dependence functionals. Arguments `x` are indexed by the
// members of `alpha` in ascending feature order. All functions are pure
// and thread-safe.

// Rank level floor(k * x), clamped to [0, n]: the number of top order
// statistics admitted in one coordinate.
long rank_level(const RankedData& rd, const TailParams& p, double x);

// Number of rows extreme in every coordinate of alpha at one common rank
// level (clamped to [0, n]). Integer building block shared by the
// estimators so that algebraically equal quantities stay bit-identical.
long joint_exceedance_count(const RankedData& rd, const FeatureSet& alpha,
                            long level);

// Empirical joint tail function: (1/k) * #{i : for all j in alpha,
// n + 1 - R_{i,j} <= floor(k x_j)}. Coordinatewise non-decreasing in x;
// zero as soon as one level is zero.
double empirical_r(const RankedData& rd, const FeatureSet& alpha,
                   std::span<const double> x, const TailParams& p);

// Convenience overload with x = c for every coordinate.
double empirical_r(const RankedData& rd, const FeatureSet& alpha, double c,
                   const TailParams& p);

// Empirical stable tail dependence function: (1/k) * #{i : there is a
// j in alpha with n + 1 - R_{i,j} <= floor(k x_j)}.
double empirical_ell(const RankedData& rd, const FeatureSet& alpha,
                     std::span<const double> x, const TailParams& p);

// Empirical joint tail coefficient rho = r(1, ..., 1).
double rho_hat(const RankedData& rd, const FeatureSet& alpha,
               const TailParams& p);

// Empirical mass of the region where at least |alpha|-1 coordinates are
// extreme: sum_j rho(alpha \ j) - (|alpha|-1) rho(alpha). Requires
// |alpha| >= 2.
double mu_delta_hat(const RankedData& rd, const FeatureSet& alpha,
                    const TailParams& p);

// Empirical conditional tail dependence ratio at x: joint exceedance
// count over the count of rows extreme in all but at most one coordinate.
// Returns 0 when the denominator count is 0. Requires |alpha| >= 2.
double kappa_hat_at(const RankedData& rd, const FeatureSet& alpha,
                    std::span<const double> x, const TailParams& p);

// Componentwise minimum of the Pareto-standardized columns in alpha:
// T_i = min_{j in alpha} n / (n + 1 - R_{i,j}).
std::vector<double> min_pareto_transform(const RankedData& rd,
                                         const FeatureSet& alpha);

}  // namespace taildep
