#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace taildep {

// A bitmask over the n observations of a dataset. One BitRow marks the
// rows exceeding a rank threshold in one column; joint exceedance counts
// are popcounts of AND-ed rows.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(int n) : n_(n), words_((n + 63) / 64, 0) {}

    int n() const noexcept { return n_; }

    void set(int i) noexcept {
        words_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1}
                                                    << (i & 63);
    }

    bool test(int i) const noexcept {
        return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
    }

    long count() const noexcept {
        long c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    void and_assign(const BitRow& other) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] &= other.words_[w];
    }

    void or_assign(const BitRow& other) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] |= other.words_[w];
    }

    long and_count(const BitRow& other) const noexcept {
        long c = 0;
        for (std::size_t w = 0; w < words_.size(); ++w)
            c += std::popcount(words_[w] & other.words_[w]);
        return c;
    }

    // Popcount of the intersection of all given rows. Empty input counts
    // nothing; a single row is its own popcount.
    static long joint_count(const std::vector<const BitRow*>& rows) {
        if (rows.empty()) return 0;
        if (rows.size() == 1) return rows[0]->count();
        long c = 0;
        const std::size_t nwords = rows[0]->words_.size();
        for (std::size_t w = 0; w < nwords; ++w) {
            std::uint64_t acc = rows[0]->words_[w];
            for (std::size_t r = 1; acc && r < rows.size(); ++r)
                acc &= rows[r]->words_[w];
            c += std::popcount(acc);
        }
        return c;
    }

    // Popcount of the union of all given rows.
    static long union_count(const std::vector<const BitRow*>& rows) {
        if (rows.empty()) return 0;
        long c = 0;
        const std::size_t nwords = rows[0]->words_.size();
        for (std::size_t w = 0; w < nwords; ++w) {
            std::uint64_t acc = 0;
            for (const BitRow* r : rows) acc |= r->words_[w];
            c += std::popcount(acc);
        }
        return c;
    }

private:
    friend class RankedData;
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace taildep
