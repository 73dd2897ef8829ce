#pragma once

#include <string>
#include <vector>

#include "taildep/feature_set.hpp"
#include "taildep/tail_functions.hpp"

namespace taildep {

// Parameters shared by the keep/stop criteria.
struct TestConfig {
    double delta = 0.001;      // one-sided test level, in (0, 0.5)
    double kappa_min = 0.08;   // tolerance of the asymptotic-kappa test
    double clef_c = 0.05;      // threshold of the original CLEF rule
    double rho_guard = 0.05;   // Peng stops below this empirical rho
    double fd_exponent = 0.25; // finite-difference step is k^(-fd_exponent)

    void validate() const;
};

enum class Guard {
    kNone,
    kZeroRho,             // no extreme record hits all coordinates
    kLowRho,              // joint tail mass below rho_guard (Peng)
    kDegeneratePengRatio, // r(2) == r(1), Peng estimator undefined
    kZeroDenominator,     // empirical mass of the Delta region is zero
};

std::string guard_name(Guard g);

// Variance estimate with flags: `defined` is false when the plug-in
// formula has no value (zero denominator); `clamped` records a negative
// plug-in value truncated to zero.
struct SigmaEstimate {
    double value = 0.0;  // sigma^2
    bool defined = false;
    bool clamped = false;

    double sigma() const;  // sqrt of the clamped value
};

// Outcome of one keep/stop test for a feature subset.
struct CriterionVerdict {
    FeatureSet alpha;
    double statistic = 0.0;    // kappa-hat or eta-hat
    double sigma_hat = 0.0;    // estimated standard deviation
    bool sigma_defined = false;
    bool variance_clamped = false;
    double threshold = 0.0;
    bool keep = false;
    Guard guard = Guard::kNone;
};

// ---- Conditional tail dependence coefficient (kappa) ----

// kappa-hat at the all-ones point, via the ratio of region counts.
// Requires |alpha| >= 2; 0 when the denominator region is empty.
double kappa_hat(const RankedData& rd, const FeatureSet& alpha,
                 const TailParams& p);

// Central finite differences of kappa_hat_at around 1 with step
// h = k^(-fd_exponent), one entry per member of alpha (ascending).
std::vector<double> kappa_derivatives(const RankedData& rd,
                                      const FeatureSet& alpha,
                                      const TailParams& p,
                                      const TestConfig& cfg);

// Plug-in estimate of the asymptotic variance of sqrt(k) kappa-hat.
SigmaEstimate kappa_sigma_hat(const RankedData& rd, const FeatureSet& alpha,
                              const TailParams& p, const TestConfig& cfg);

// Keep iff kappa-hat >= kappa_min + q_delta * sigma / sqrt(k), where
// q_delta is the (negative) delta-quantile of the standard normal, so the
// effective threshold sits below kappa_min.
CriterionVerdict kappa_criterion(const RankedData& rd, const FeatureSet& alpha,
                                 const TailParams& p, const TestConfig& cfg);

// Original CLEF rule: keep iff kappa-hat >= C.
CriterionVerdict clef_original_criterion(const RankedData& rd,
                                         const FeatureSet& alpha,
                                         const TailParams& p,
                                         const TestConfig& cfg);

// ---- Coefficient of tail dependence, Peng-type estimator ----

struct PengEta {
    double value = 0.0;
    Guard guard = Guard::kNone;  // kNone when defined
};

// eta-hat = log 2 / log{ r(2,...,2) / r(1,...,1) }. Undefined (guarded)
// when r(1) = 0 or when the two joint tail counts coincide.
PengEta peng_eta_hat(const RankedData& rd, const FeatureSet& alpha,
                     const TailParams& p);

// Central finite differences of the empirical joint tail function at the
// all-ones point, step k^(-fd_exponent).
std::vector<double> rho_derivatives(const RankedData& rd,
                                    const FeatureSet& alpha,
                                    const TailParams& p,
                                    const TestConfig& cfg);

SigmaEstimate peng_sigma_hat(const RankedData& rd, const FeatureSet& alpha,
                             const TailParams& p, const TestConfig& cfg);

// Keep iff eta-hat >= 1 - q_{1-delta} * sigma / sqrt(k), guarded by
// rho-hat < rho_guard and by the degenerate count ratio.
CriterionVerdict peng_criterion(const RankedData& rd, const FeatureSet& alpha,
                                const TailParams& p, const TestConfig& cfg);

// ---- Coefficient of tail dependence, Hill-type estimator ----

// Hill estimator on the min-Pareto transform:
// (1/k) sum_{i=1}^{k} log( T_{(n-i+1)} / T_{(n-k)} ).
double hill_eta_hat(const RankedData& rd, const FeatureSet& alpha,
                    const TailParams& p);

// 1 - 2 rho + rho^{-1} sum_{j,j'} drho_j drho_j' rho_{jj'}; undefined
// (infinite variance) when rho-hat = 0.
SigmaEstimate hill_sigma_hat(const RankedData& rd, const FeatureSet& alpha,
                             const TailParams& p, const TestConfig& cfg);

// Keep iff rho-hat > 0 and eta-hat >= 1 - q_{1-delta} * sigma / sqrt(k).
CriterionVerdict hill_criterion(const RankedData& rd, const FeatureSet& alpha,
                                const TailParams& p, const TestConfig& cfg);

}  // namespace taildep
