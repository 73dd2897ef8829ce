#include "taildep/tail_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace taildep {

long rank_level(const RankedData& rd, const TailParams& p, double x) {
    if (x <= 0.0) return 0;
    const double lv = std::floor(static_cast<double>(p.k) * x);
    if (lv >= static_cast<double>(rd.n())) return rd.n();
    return static_cast<long>(lv);
}

namespace {

void require_nonempty(const FeatureSet& alpha) {
    if (alpha.empty()) throw ConfigError("alpha must be non-empty");
}

void require_pair_or_more(const FeatureSet& alpha) {
    if (alpha.size() < 2)
        throw ConfigError("alpha must have at least 2 features");
}

// Exceedance bit-rows of the members of alpha at per-coordinate levels.
// Returns false if some level is zero (joint count is then 0).
bool gather_rows(const RankedData& rd, const FeatureSet& alpha,
                 std::span<const double> x, const TailParams& p,
                 std::vector<const BitRow*>& rows) {
    rows.clear();
    bool any_zero = false;
    std::size_t pos = 0;
    alpha.for_each([&](int j) {
        const long level = rank_level(rd, p, x[pos++]);
        if (level <= 0) any_zero = true;
        rows.push_back(&rd.exceedance(j, level));
    });
    return !any_zero;
}

}  // namespace

long joint_exceedance_count(const RankedData& rd, const FeatureSet& alpha,
                            long level) {
    if (level <= 0) return 0;
    std::vector<const BitRow*> rows;
    rows.reserve(static_cast<std::size_t>(alpha.size()));
    alpha.for_each([&](int j) { rows.push_back(&rd.exceedance(j, level)); });
    return BitRow::joint_count(rows);
}

double empirical_r(const RankedData& rd, const FeatureSet& alpha,
                   std::span<const double> x, const TailParams& p) {
    require_nonempty(alpha);
    p.validate(rd.n());
    std::vector<const BitRow*> rows;
    if (!gather_rows(rd, alpha, x, p, rows)) return 0.0;
    return static_cast<double>(BitRow::joint_count(rows)) / p.k;
}

double empirical_r(const RankedData& rd, const FeatureSet& alpha, double c,
                   const TailParams& p) {
    const std::vector<double> x(static_cast<std::size_t>(alpha.size()), c);
    return empirical_r(rd, alpha, x, p);
}

double empirical_ell(const RankedData& rd, const FeatureSet& alpha,
                     std::span<const double> x, const TailParams& p) {
    require_nonempty(alpha);
    p.validate(rd.n());
    std::vector<const BitRow*> rows;
    gather_rows(rd, alpha, x, p, rows);
    return static_cast<double>(BitRow::union_count(rows)) / p.k;
}

double rho_hat(const RankedData& rd, const FeatureSet& alpha,
               const TailParams& p) {
    return empirical_r(rd, alpha, 1.0, p);
}

double mu_delta_hat(const RankedData& rd, const FeatureSet& alpha,
                    const TailParams& p) {
    require_pair_or_more(alpha);
    p.validate(rd.n());
    // Integer form of sum_j rho(alpha \ j) - (|alpha|-1) rho(alpha); the
    // single division keeps it bit-identical to the direct region count.
    long count = 0;
    alpha.for_each([&](int j) {
        count += joint_exceedance_count(rd, alpha.without(j), p.k);
    });
    count -= (alpha.size() - 1) * joint_exceedance_count(rd, alpha, p.k);
    return static_cast<double>(count) / static_cast<double>(p.k);
}

double kappa_hat_at(const RankedData& rd, const FeatureSet& alpha,
                    std::span<const double> x, const TailParams& p) {
    require_pair_or_more(alpha);
    p.validate(rd.n());

    std::vector<const BitRow*> rows;
    gather_rows(rd, alpha, x, p, rows);
    const std::size_t s = rows.size();

    // Denominator: rows extreme in all coordinates but at most one,
    // i.e. the union over m of the intersection of alpha \ m. Prefix and
    // suffix intersections give each leave-one-out AND in O(s) passes.
    std::vector<BitRow> prefix(s), suffix(s);
    prefix[0] = *rows[0];
    for (std::size_t t = 1; t < s; ++t) {
        prefix[t] = prefix[t - 1];
        prefix[t].and_assign(*rows[t]);
    }
    suffix[s - 1] = *rows[s - 1];
    for (std::size_t t = s - 1; t-- > 0;) {
        suffix[t] = suffix[t + 1];
        suffix[t].and_assign(*rows[t]);
    }

    BitRow denom_mask(rd.n());
    for (std::size_t m = 0; m < s; ++m) {
        if (m == 0) {
            denom_mask.or_assign(suffix[1]);
        } else if (m == s - 1) {
            denom_mask.or_assign(prefix[s - 2]);
        } else {
            BitRow leave_out = prefix[m - 1];
            leave_out.and_assign(suffix[m + 1]);
            denom_mask.or_assign(leave_out);
        }
    }

    const long denom = denom_mask.count();
    if (denom == 0) return 0.0;
    const long numer = prefix[s - 1].count();
    return static_cast<double>(numer) / static_cast<double>(denom);
}

std::vector<double> min_pareto_transform(const RankedData& rd,
                                         const FeatureSet& alpha) {
    require_nonempty(alpha);
    const int n = rd.n();
    // The Pareto transform is increasing in the rank, so the minimum over
    // alpha is attained at the smallest rank.
    std::vector<std::int32_t> min_rank(static_cast<std::size_t>(n),
                                       std::numeric_limits<std::int32_t>::max());
    alpha.for_each([&](int j) {
        const std::int32_t* col = rd.column(j);
        for (int i = 0; i < n; ++i)
            min_rank[i] = std::min(min_rank[i], col[i]);
    });
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out[i] = static_cast<double>(n) / (n + 1 - min_rank[i]);
    return out;
}

}  // namespace taildep
