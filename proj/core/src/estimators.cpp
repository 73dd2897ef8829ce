#include "taildep/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "taildep/normal.hpp"

namespace taildep {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Pairwise empirical joint tail coefficient, with the diagonal fixed to 1.
double rho_pair(const RankedData& rd, int j, int jprime, const TailParams& p) {
    if (j == jprime) return 1.0;
    const long k = p.k;
    return static_cast<double>(
               rd.exceedance(j, k).and_count(rd.exceedance(jprime, k))) /
           static_cast<double>(k);
}

// r over the pair {j, j'} evaluated at x_j = 2, x_j' = 1; equals 1 on the
// diagonal by convention.
double r_pair_21(const RankedData& rd, int j, int jprime, const TailParams& p) {
    if (j == jprime) return 1.0;
    const long two_k = std::min<long>(2L * p.k, rd.n());
    return static_cast<double>(
               rd.exceedance(j, two_k).and_count(rd.exceedance(jprime, p.k))) /
           static_cast<double>(p.k);
}

double fd_step(const TailParams& p, const TestConfig& cfg) {
    const double h = std::pow(static_cast<double>(p.k), -cfg.fd_exponent);
    if (1.0 - h < 0.0)
        throw ConfigError(
            "finite-difference step k^(-" + std::to_string(cfg.fd_exponent) +
            ") exceeds 1 for k=" + std::to_string(p.k) +
            "; increase k");
    return h;
}

template <typename Eval>
std::vector<double> central_differences(const FeatureSet& alpha, double h,
                                        Eval&& eval) {
    const std::size_t s = static_cast<std::size_t>(alpha.size());
    std::vector<double> x(s, 1.0);
    std::vector<double> out(s);
    for (std::size_t pos = 0; pos < s; ++pos) {
        x[pos] = 1.0 + h;
        const double up = eval(x);
        x[pos] = 1.0 - h;
        const double down = eval(x);
        x[pos] = 1.0;
        out[pos] = (up - down) / (2.0 * h);
    }
    return out;
}

SigmaEstimate clamp_variance(double value) {
    SigmaEstimate est;
    est.defined = true;
    est.clamped = value < 0.0;
    est.value = est.clamped ? 0.0 : value;
    return est;
}

}  // namespace

void TestConfig::validate() const {
    if (!(delta > 0.0 && delta < 0.5))
        throw ConfigError("delta must lie in (0, 0.5)");
    if (!(kappa_min > 0.0 && kappa_min < 1.0))
        throw ConfigError("kappa_min must lie in (0, 1)");
    if (!(clef_c > 0.0 && clef_c < 1.0))
        throw ConfigError("clef threshold C must lie in (0, 1)");
    if (rho_guard < 0.0) throw ConfigError("rho_guard must be >= 0");
    if (!(fd_exponent > 0.0))
        throw ConfigError("fd_exponent must be positive");
}

std::string guard_name(Guard g) {
    switch (g) {
        case Guard::kNone: return "none";
        case Guard::kZeroRho: return "zero_rho";
        case Guard::kLowRho: return "low_rho";
        case Guard::kDegeneratePengRatio: return "degenerate_peng_ratio";
        case Guard::kZeroDenominator: return "zero_denominator";
    }
    return "unknown";
}

double SigmaEstimate::sigma() const {
    return defined ? std::sqrt(value) : kNaN;
}

// ---- kappa ----

double kappa_hat(const RankedData& rd, const FeatureSet& alpha,
                 const TailParams& p) {
    if (alpha.size() < 2)
        throw ConfigError("alpha must have at least 2 features");
    p.validate(rd.n());
    // Ratio form on integer counts: the denominator is the disjoint-union
    // identity applied to the empirical measure, so it matches the direct
    // region count of kappa_hat_at bit for bit.
    const long gamma = joint_exceedance_count(rd, alpha, p.k);
    long delta = -static_cast<long>(alpha.size() - 1) * gamma;
    alpha.for_each([&](int j) {
        delta += joint_exceedance_count(rd, alpha.without(j), p.k);
    });
    if (delta <= 0) return 0.0;
    return static_cast<double>(gamma) / static_cast<double>(delta);
}

std::vector<double> kappa_derivatives(const RankedData& rd,
                                      const FeatureSet& alpha,
                                      const TailParams& p,
                                      const TestConfig& cfg) {
    const double h = fd_step(p, cfg);
    return central_differences(alpha, h, [&](std::span<const double> x) {
        return kappa_hat_at(rd, alpha, x, p);
    });
}

SigmaEstimate kappa_sigma_hat(const RankedData& rd, const FeatureSet& alpha,
                              const TailParams& p, const TestConfig& cfg) {
    const double mu_delta = mu_delta_hat(rd, alpha, p);
    if (mu_delta <= 0.0) return SigmaEstimate{};  // undefined

    const double kap = kappa_hat(rd, alpha, p);
    const std::vector<double> dot = kappa_derivatives(rd, alpha, p, cfg);
    const std::vector<int> members = alpha.indices();
    const std::size_t s = members.size();

    const double dot_sum = std::accumulate(dot.begin(), dot.end(), 0.0);

    double cross = 0.0;
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b)
            cross += dot[a] * dot[b] * rho_pair(rd, members[a], members[b], p);

    double tail = 0.0;
    for (std::size_t a = 0; a < s; ++a) {
        const double rho_minus_j =
            rho_hat(rd, alpha.without(members[a]), p);
        tail += dot[a] * (1.0 - rho_minus_j / mu_delta);
    }

    const double variance =
        (1.0 - kap) * kap * (1.0 / mu_delta - dot_sum) + cross + kap * tail;
    return clamp_variance(variance);
}

CriterionVerdict kappa_criterion(const RankedData& rd, const FeatureSet& alpha,
                                 const TailParams& p, const TestConfig& cfg) {
    cfg.validate();
    CriterionVerdict v;
    v.alpha = alpha;

    const double mu_delta = mu_delta_hat(rd, alpha, p);
    if (mu_delta <= 0.0) {
        v.statistic = 0.0;  // kappa = 0 by convention
        v.sigma_hat = kNaN;
        v.threshold = cfg.kappa_min;
        v.guard = Guard::kZeroDenominator;
        v.keep = false;
        return v;
    }

    v.statistic = kappa_hat(rd, alpha, p);
    const SigmaEstimate sig = kappa_sigma_hat(rd, alpha, p, cfg);
    v.sigma_hat = sig.sigma();
    v.sigma_defined = sig.defined;
    v.variance_clamped = sig.clamped;

    const double q_delta = normal_quantile(cfg.delta);  // negative
    v.threshold =
        cfg.kappa_min + q_delta * v.sigma_hat / std::sqrt(double(p.k));
    v.keep = v.statistic >= v.threshold;
    return v;
}

CriterionVerdict clef_original_criterion(const RankedData& rd,
                                         const FeatureSet& alpha,
                                         const TailParams& p,
                                         const TestConfig& cfg) {
    cfg.validate();
    CriterionVerdict v;
    v.alpha = alpha;
    v.statistic = kappa_hat(rd, alpha, p);
    v.sigma_hat = kNaN;
    v.threshold = cfg.clef_c;
    if (mu_delta_hat(rd, alpha, p) <= 0.0) {
        v.guard = Guard::kZeroDenominator;
        v.keep = false;
        return v;
    }
    v.keep = v.statistic >= v.threshold;
    return v;
}

// ---- Peng ----

PengEta peng_eta_hat(const RankedData& rd, const FeatureSet& alpha,
                     const TailParams& p) {
    if (alpha.size() < 2)
        throw ConfigError("alpha must have at least 2 features");
    p.validate(rd.n());

    const long c1 = joint_exceedance_count(rd, alpha, p.k);
    const long c2 = joint_exceedance_count(
        rd, alpha, std::min<long>(2L * p.k, rd.n()));
    if (c1 == 0) return PengEta{kNaN, Guard::kZeroRho};
    if (c2 == c1) return PengEta{kNaN, Guard::kDegeneratePengRatio};
    return PengEta{std::log(2.0) /
                       std::log(static_cast<double>(c2) / c1),
                   Guard::kNone};
}

std::vector<double> rho_derivatives(const RankedData& rd,
                                    const FeatureSet& alpha,
                                    const TailParams& p,
                                    const TestConfig& cfg) {
    const double h = fd_step(p, cfg);
    return central_differences(alpha, h, [&](std::span<const double> x) {
        return empirical_r(rd, alpha, x, p);
    });
}

SigmaEstimate peng_sigma_hat(const RankedData& rd, const FeatureSet& alpha,
                             const TailParams& p, const TestConfig& cfg) {
    const double rho = rho_hat(rd, alpha, p);
    if (rho <= 0.0) return SigmaEstimate{};  // undefined

    const std::vector<double> dot = rho_derivatives(rd, alpha, p, cfg);
    const std::vector<int> members = alpha.indices();
    const std::size_t s = members.size();

    double linear = 0.0;
    std::vector<double> x(s, 1.0);
    for (std::size_t a = 0; a < s; ++a) {
        x[a] = 2.0;  // the all-ones point lifted to 2 in coordinate a
        const double r_two_j = empirical_r(rd, alpha, x, p);
        x[a] = 1.0;
        linear += dot[a] * (-4.0 * rho + 2.0 * r_two_j);
    }

    double cross = 0.0;
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b)
            cross += dot[a] * dot[b] *
                     (3.0 * rho_pair(rd, members[a], members[b], p) -
                      2.0 * r_pair_21(rd, members[a], members[b], p));

    const double log2 = std::log(2.0);
    const double variance =
        (rho + linear + cross) / (2.0 * rho * rho * log2 * log2);
    return clamp_variance(variance);
}

CriterionVerdict peng_criterion(const RankedData& rd, const FeatureSet& alpha,
                                const TailParams& p, const TestConfig& cfg) {
    cfg.validate();
    CriterionVerdict v;
    v.alpha = alpha;
    v.statistic = kNaN;
    v.sigma_hat = kNaN;
    v.threshold = kNaN;

    const double rho = rho_hat(rd, alpha, p);
    if (rho <= 0.0) {
        v.guard = Guard::kZeroRho;
        return v;
    }
    const PengEta eta = peng_eta_hat(rd, alpha, p);
    if (eta.guard == Guard::kNone) v.statistic = eta.value;

    if (rho < cfg.rho_guard) {
        v.guard = Guard::kLowRho;
        return v;
    }
    if (eta.guard != Guard::kNone) {
        v.guard = eta.guard;
        return v;
    }

    const SigmaEstimate sig = peng_sigma_hat(rd, alpha, p, cfg);
    v.sigma_hat = sig.sigma();
    v.sigma_defined = sig.defined;
    v.variance_clamped = sig.clamped;

    const double q_up = normal_quantile(1.0 - cfg.delta);
    v.threshold = 1.0 - q_up * v.sigma_hat / std::sqrt(double(p.k));
    v.keep = v.statistic >= v.threshold;
    return v;
}

// ---- Hill ----

double hill_eta_hat(const RankedData& rd, const FeatureSet& alpha,
                    const TailParams& p) {
    if (alpha.size() < 2)
        throw ConfigError("alpha must have at least 2 features");
    p.validate(rd.n());
    const int n = rd.n();
    const int k = p.k;

    // T_i = n / (n + 1 - min rank); ordering T ascending is ordering the
    // row-wise minimum rank ascending, so select on the integer ranks.
    std::vector<std::int32_t> min_rank(static_cast<std::size_t>(n),
                                       std::numeric_limits<std::int32_t>::max());
    alpha.for_each([&](int j) {
        const std::int32_t* col = rd.column(j);
        for (int i = 0; i < n; ++i)
            min_rank[i] = std::min(min_rank[i], col[i]);
    });

    // Top k+1 values of min_rank; the (k+1)-th largest anchors the ratio.
    std::nth_element(min_rank.begin(), min_rank.begin() + k, min_rank.end(),
                     std::greater<>());
    const double anchor =
        std::log(static_cast<double>(n + 1 - min_rank[k]));
    double sum = 0.0;
    for (int i = 0; i < k; ++i)
        sum += anchor - std::log(static_cast<double>(n + 1 - min_rank[i]));
    return sum / static_cast<double>(k);
}

SigmaEstimate hill_sigma_hat(const RankedData& rd, const FeatureSet& alpha,
                             const TailParams& p, const TestConfig& cfg) {
    const double rho = rho_hat(rd, alpha, p);
    if (rho <= 0.0) return SigmaEstimate{};  // infinite variance

    const std::vector<double> dot = rho_derivatives(rd, alpha, p, cfg);
    const std::vector<int> members = alpha.indices();
    const std::size_t s = members.size();

    double cross = 0.0;
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b)
            cross += dot[a] * dot[b] * rho_pair(rd, members[a], members[b], p);

    return clamp_variance(1.0 - 2.0 * rho + cross / rho);
}

CriterionVerdict hill_criterion(const RankedData& rd, const FeatureSet& alpha,
                                const TailParams& p, const TestConfig& cfg) {
    cfg.validate();
    CriterionVerdict v;
    v.alpha = alpha;
    v.statistic = hill_eta_hat(rd, alpha, p);

    const double rho = rho_hat(rd, alpha, p);
    if (rho <= 0.0) {
        v.sigma_hat = kNaN;
        v.threshold = kNaN;
        v.guard = Guard::kZeroRho;
        return v;
    }

    const SigmaEstimate sig = hill_sigma_hat(rd, alpha, p, cfg);
    v.sigma_hat = sig.sigma();
    v.sigma_defined = sig.defined;
    v.variance_clamped = sig.clamped;

    const double q_up = normal_quantile(1.0 - cfg.delta);
    v.threshold = 1.0 - q_up * v.sigma_hat / std::sqrt(double(p.k));
    v.keep = v.statistic >= v.threshold;
    return v;
}

}  // namespace taildep
