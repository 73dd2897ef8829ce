#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "taildep/errors.hpp"

namespace taildep {

// A subset of feature indices {0, ..., kMaxFeatures-1} stored as a
// fixed-width bitset with its cardinality cached. Feature indices are
// 0-based internally; human-facing output converts to 1-based.
class FeatureSet {
public:
    static constexpr int kMaxFeatures = 256;
    static constexpr int kWords = kMaxFeatures / 64;

    constexpr FeatureSet() = default;

    static FeatureSet singleton(int j) {
        FeatureSet s;
        s.add(j);
        return s;
    }

    static FeatureSet of(std::initializer_list<int> indices) {
        FeatureSet s;
        for (int j : indices) s.add(j);
        return s;
    }

    static FeatureSet of(const std::vector<int>& indices) {
        FeatureSet s;
        for (int j : indices) s.add(j);
        return s;
    }

    // All features {0, ..., d-1}.
    static FeatureSet full(int d) {
        FeatureSet s;
        for (int j = 0; j < d; ++j) s.add(j);
        return s;
    }

    int size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool contains(int j) const noexcept {
        return (words_[word(j)] >> bit(j)) & 1u;
    }

    void add(int j) {
        check_index(j);
        const std::uint64_t mask = std::uint64_t{1} << bit(j);
        if (!(words_[word(j)] & mask)) {
            words_[word(j)] |= mask;
            ++size_;
        }
    }

    void remove(int j) {
        check_index(j);
        const std::uint64_t mask = std::uint64_t{1} << bit(j);
        if (words_[word(j)] & mask) {
            words_[word(j)] &= ~mask;
            --size_;
        }
    }

    FeatureSet with(int j) const {
        FeatureSet s = *this;
        s.add(j);
        return s;
    }

    FeatureSet without(int j) const {
        FeatureSet s = *this;
        s.remove(j);
        return s;
    }

    bool is_subset_of(const FeatureSet& other) const noexcept {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & ~other.words_[w]) return false;
        return true;
    }

    bool is_proper_subset_of(const FeatureSet& other) const noexcept {
        return size_ < other.size_ && is_subset_of(other);
    }

    int intersection_size(const FeatureSet& other) const noexcept {
        int c = 0;
        for (int w = 0; w < kWords; ++w)
            c += std::popcount(words_[w] & other.words_[w]);
        return c;
    }

    friend FeatureSet operator|(const FeatureSet& a, const FeatureSet& b) {
        FeatureSet s;
        int c = 0;
        for (int w = 0; w < kWords; ++w) {
            s.words_[w] = a.words_[w] | b.words_[w];
            c += std::popcount(s.words_[w]);
        }
        s.size_ = c;
        return s;
    }

    friend FeatureSet operator&(const FeatureSet& a, const FeatureSet& b) {
        FeatureSet s;
        int c = 0;
        for (int w = 0; w < kWords; ++w) {
            s.words_[w] = a.words_[w] & b.words_[w];
            c += std::popcount(s.words_[w]);
        }
        s.size_ = c;
        return s;
    }

    // Member indices in ascending order.
    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size_));
        for (int w = 0; w < kWords; ++w) {
            std::uint64_t v = words_[w];
            while (v) {
                out.push_back(64 * w + std::countr_zero(v));
                v &= v - 1;
            }
        }
        return out;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (int w = 0; w < kWords; ++w) {
            std::uint64_t v = words_[w];
            while (v) {
                fn(64 * w + std::countr_zero(v));
                v &= v - 1;
            }
        }
    }

    bool operator==(const FeatureSet& other) const noexcept {
        return words_ == other.words_;
    }
    bool operator!=(const FeatureSet& other) const noexcept {
        return words_ != other.words_;
    }

    // Lexicographic order on the ascending index sequences. Members below
    // the lowest differing index p coincide; the set holding p wins unless
    // the other side is already exhausted (a strict prefix sorts first).
    bool operator<(const FeatureSet& other) const noexcept {
        for (int w = 0; w < kWords; ++w) {
            const std::uint64_t diff = words_[w] ^ other.words_[w];
            if (!diff) continue;
            const int p = std::countr_zero(diff);
            const std::uint64_t above = (~std::uint64_t{0} << p) << 1;
            const bool this_has_p = (words_[w] >> p) & 1u;
            const auto& tail = this_has_p ? other.words_ : words_;
            bool tail_nonempty = (tail[w] & above) != 0;
            for (int w2 = w + 1; w2 < kWords && !tail_nonempty; ++w2)
                tail_nonempty = tail[w2] != 0;
            return this_has_p ? tail_nonempty : !tail_nonempty;
        }
        return false;
    }

    std::size_t hash() const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint64_t w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

    // "{1,4,7}" with 1-based indices, for diagnostics and reports.
    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for_each([&](int j) {
            if (!first) out += ',';
            out += std::to_string(j + 1);
            first = false;
        });
        out += '}';
        return out;
    }

private:
    static int word(int j) noexcept { return j >> 6; }
    static int bit(int j) noexcept { return j & 63; }
    static void check_index(int j) {
        if (j < 0 || j >= kMaxFeatures)
            throw DataError("feature index " + std::to_string(j) +
                            " outside supported range [0, " +
                            std::to_string(kMaxFeatures - 1) + "]");
    }

    std::array<std::uint64_t, kWords> words_{};
    int size_ = 0;
};

struct FeatureSetHash {
    std::size_t operator()(const FeatureSet& s) const noexcept {
        return s.hash();
    }
};

}  // namespace taildep
