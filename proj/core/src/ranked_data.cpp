#include "taildep/ranked_data.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace taildep {

RankedData::RankedData(int n, int d, std::vector<std::int32_t> ranks)
    : n_(n), d_(d), ranks_(std::move(ranks)) {
    if (n_ < 2 || d_ < 2)
        throw DataError("RankedData needs n >= 2 and d >= 2");
    if (ranks_.size() != static_cast<std::size_t>(n_) * d_)
        throw DataError("rank matrix size mismatch");

    // Verify each column is a permutation of {1, ..., n} and invert it.
    order_desc_.assign(ranks_.size(), 0);
    std::vector<char> seen(static_cast<std::size_t>(n_));
    for (int j = 0; j < d_; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        const std::int32_t* col = column(j);
        std::int32_t* ord = order_desc_.data() +
                            static_cast<std::size_t>(j) * n_;
        for (int i = 0; i < n_; ++i) {
            const std::int32_t r = col[i];
            if (r < 1 || r > n_ || seen[r - 1])
                throw DataError("column " + std::to_string(j + 1) +
                                " is not a permutation of {1,...,n}");
            seen[r - 1] = 1;
            ord[n_ - r] = i;  // slot t holds the row with rank n - t
        }
    }

    empty_row_ = BitRow(n_);
    full_row_ = BitRow(n_);
    for (int i = 0; i < n_; ++i) full_row_.set(i);
}

const BitRow& RankedData::exceedance(int j, long level) const {
    if (level <= 0) return empty_row_;
    if (level >= n_) return full_row_;
    return cached_row(j, static_cast<int>(level));
}

const BitRow& RankedData::cached_row(int j, int level) const {
    const std::uint64_t key =
        (static_cast<std::uint64_t>(j) << 32) | static_cast<std::uint32_t>(level);
    {
        std::shared_lock lock(cache_mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return *it->second;
    }
    std::unique_lock lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;

    auto row = std::make_unique<BitRow>(n_);
    const std::int32_t* ord = order_desc_.data() +
                              static_cast<std::size_t>(j) * n_;
    for (int t = 0; t < level; ++t) row->set(ord[t]);
    const BitRow& ref = *row;
    cache_.emplace(key, std::move(row));
    return ref;
}

RankedData compute_ranks(const DataMatrix& data, TiePolicy policy,
                         std::uint64_t jitter_seed) {
    data.validate();
    const int n = data.n();
    const int d = data.d();

    std::vector<std::int32_t> ranks(static_cast<std::size_t>(n) * d);
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::vector<double> keys;
    std::vector<int> tied_columns;

    for (int j = 0; j < d; ++j) {
        std::iota(idx.begin(), idx.end(), 0);
        if (policy == TiePolicy::kJitter) {
            // Random tie-break keys, deterministic in (seed, column).
            std::mt19937_64 rng(jitter_seed ^
                                (0x9e3779b97f4a7c15ull *
                                 (static_cast<std::uint64_t>(j) + 1)));
            keys.resize(static_cast<std::size_t>(n));
            std::uniform_real_distribution<double> unif(0.0, 1.0);
            for (int i = 0; i < n; ++i) keys[i] = unif(rng);
            std::sort(idx.begin(), idx.end(), [&](int a, int b) {
                const double va = data(a, j), vb = data(b, j);
                if (va != vb) return va < vb;
                return keys[a] < keys[b];
            });
        } else {
            // Stable sort: tied values keep row order (first occurrence
            // receives the smaller rank).
            std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
                return data(a, j) < data(b, j);
            });
        }
        bool has_tie = false;
        for (int t = 1; t < n && !has_tie; ++t)
            has_tie = data(idx[t - 1], j) == data(idx[t], j);
        if (has_tie && policy == TiePolicy::kForbid) {
            tied_columns.push_back(j + 1);
            continue;
        }
        std::int32_t* col = ranks.data() + static_cast<std::size_t>(j) * n;
        for (int t = 0; t < n; ++t) col[idx[t]] = t + 1;
    }

    if (!tied_columns.empty()) {
        std::string msg = "ties found in column(s)";
        for (int c : tied_columns) msg += " " + std::to_string(c);
        msg += "; re-run with a tie-breaking policy (first-occurrence or "
               "jitter)";
        throw DataError(msg);
    }
    return RankedData(n, d, std::move(ranks));
}

}  // namespace taildep
