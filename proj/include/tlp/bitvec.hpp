#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

namespace tlp {

/// Fixed-length dynamic bitset backed by 64-bit words. Index 0 is the
/// logically first position; word layout and padding are internal.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVec ones(std::size_t n) {
        BitVec b(n);
        for (auto& w : b.w_) w = ~0ULL;
        b.clear_padding();
        return b;
    }

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const {
        assert(i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1ULL;
    }
    void set(std::size_t i) {
        assert(i < n_);
        w_[i >> 6] |= 1ULL << (i & 63);
    }
    void reset(std::size_t i) {
        assert(i < n_);
        w_[i >> 6] &= ~(1ULL << (i & 63));
    }
    void clear() { std::fill(w_.begin(), w_.end(), 0ULL); }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    BitVec& operator&=(const BitVec& o) {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    BitVec& operator|=(const BitVec& o) {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    /// this \ o
    BitVec& and_not(const BitVec& o) {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }
    BitVec complement() const {
        BitVec r(n_);
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
        r.clear_padding();
        return r;
    }

    bool subset_of(const BitVec& o) const {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    bool intersects(const BitVec& o) const {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

    /// True iff some position < i is set.
    bool any_below(std::size_t i) const {
        std::size_t full = i >> 6;
        for (std::size_t k = 0; k < full; ++k)
            if (w_[k]) return true;
        std::size_t rem = i & 63;
        if (rem && full < w_.size() && (w_[full] & ((1ULL << rem) - 1))) return true;
        return false;
    }

    /// Keep only positions < i.
    void truncate_from(std::size_t i) {
        std::size_t full = i >> 6;
        std::size_t rem = i & 63;
        for (std::size_t k = full; k < w_.size(); ++k) {
            if (k == full && rem)
                w_[k] &= (1ULL << rem) - 1;
            else
                w_[k] = 0;
        }
    }

    int first_set() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return int(k * 64 + std::countr_zero(w_[k]));
        return -1;
    }

    template <class F>
    void for_each_set(F&& f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                f(k * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_indices() const {
        std::vector<int> v;
        v.reserve(count());
        for_each_set([&](std::size_t i) { v.push_back(int(i)); });
        return v;
    }

    /// Position-0-first lexicographic order on the 0/1 sequences: at the
    /// first differing position, the vector with a 0 there is smaller.
    static bool lex_less(const BitVec& a, const BitVec& b) {
        assert(a.n_ == b.n_);
        for (std::size_t k = 0; k < a.w_.size(); ++k) {
            std::uint64_t d = a.w_[k] ^ b.w_[k];
            if (d) {
                int i = std::countr_zero(d);
                return !((a.w_[k] >> i) & 1ULL);
            }
        }
        return false;
    }

    std::string bytes() const {
        std::string s;
        s.resize(w_.size() * 8);
        std::memcpy(s.data(), w_.data(), s.size());
        return s;
    }

private:
    void clear_padding() {
        if (n_ & 63) w_.back() &= (1ULL << (n_ & 63)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace tlp
