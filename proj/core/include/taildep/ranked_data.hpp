#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "taildep/bit_row.hpp"
#include "taildep/data_matrix.hpp"
#include "taildep/errors.hpp"

namespace taildep {

// Number of upper order statistics treated as extreme. All estimators
// are functionals of the top-k ranks.
struct TailParams {
    int k = 0;

    void validate(int n) const {
        if (k < 1 || k > n - 1)
            throw ConfigError("k must satisfy 1 <= k <= n-1, got k=" +
                              std::to_string(k) + " with n=" +
                              std::to_string(n));
    }
};

enum class TiePolicy {
    kFirstOccurrence,  // stable: ties ranked by row index (default)
    kJitter,           // ties broken by a seeded random key
    kForbid,           // any tie is a data error naming the columns
};

// Column ranks of a DataMatrix: each column is a permutation of
// {1, ..., n} after tie-breaking. Immutable once constructed; the lazily
// materialized exceedance bit-rows are memoized behind a shared mutex, so
// all member functions are safe to call concurrently.
class RankedData {
public:
    RankedData(int n, int d, std::vector<std::int32_t> column_major_ranks);

    int n() const noexcept { return n_; }
    int d() const noexcept { return d_; }

    // Rank of observation i in column j, in {1, ..., n}.
    std::int32_t rank(int i, int j) const noexcept {
        return ranks_[static_cast<std::size_t>(j) * n_ + i];
    }

    // Pareto-standardized value n / (n + 1 - rank), in [1, n].
    double pareto(int i, int j) const noexcept {
        return static_cast<double>(n_) / (n_ + 1 - rank(i, j));
    }

    const std::int32_t* column(int j) const noexcept {
        return ranks_.data() + static_cast<std::size_t>(j) * n_;
    }

    // Bitmask of the rows whose column-j rank lies in the top `level`,
    // i.e. rank >= n - level + 1. Levels at or below 0 match nothing;
    // levels at or above n match everything. Cached per (column, level).
    const BitRow& exceedance(int j, long level) const;

private:
    const BitRow& cached_row(int j, int level) const;

    int n_ = 0;
    int d_ = 0;
    std::vector<std::int32_t> ranks_;  // column-major
    // Per column, row indices ordered by descending rank: topo_[j][t] is
    // the row holding rank n - t.
    std::vector<std::int32_t> order_desc_;

    BitRow empty_row_;
    BitRow full_row_;
    mutable std::shared_mutex cache_mutex_;
    mutable std::unordered_map<std::uint64_t, std::unique_ptr<BitRow>> cache_;
};

// Ranks each column ascending (rank 1 = smallest). Under kForbid, any
// tied column is rejected with a diagnostic listing the columns. Under
// kJitter the seed is required for reproducibility.
RankedData compute_ranks(const DataMatrix& data,
                         TiePolicy policy = TiePolicy::kFirstOccurrence,
                         std::uint64_t jitter_seed = 0);

}  // namespace taildep
