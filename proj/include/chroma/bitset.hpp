#pragma once

#include "chroma/kernels.hpp"

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace chroma {

// Fixed-width vertex set over 64-bit words. Binary operations require both
// operands to have the same width; the heavy loops go through the kernel
// dispatch in chroma::kern.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int nbits() const { return nbits_; }
    std::size_t words() const { return w_.size(); }
    const std::uint64_t* data() const { return w_.data(); }

    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < nbits_);
        w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        w_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    int count() const {
        return static_cast<int>(kern::active().popcount(w_.data(), w_.size()));
    }
    bool any() const {
        for (std::uint64_t x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    int and_count(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        return static_cast<int>(kern::active().and_count(w_.data(), o.w_.data(), w_.size()));
    }
    bool subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        return kern::active().is_subset(w_.data(), o.w_.data(), w_.size());
    }
    bool intersects(const Bitset& o) const { return and_count(o) > 0; }

    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        kern::active().and_into(w_.data(), w_.data(), o.w_.data(), w_.size());
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        kern::active().or_into(w_.data(), w_.data(), o.w_.data(), w_.size());
        return *this;
    }
    // set difference: *this &= ~o
    Bitset& operator-=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        kern::active().andnot_into(w_.data(), w_.data(), o.w_.data(), w_.size());
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.nbits_ == b.nbits_ && a.w_ == b.w_;
    }

    // clear all bits below position i
    void reset_below(int i) {
        if (i <= 0) return;
        if (i >= nbits_) {
            clear();
            return;
        }
        std::size_t wi = static_cast<std::size_t>(i) >> 6;
        for (std::size_t k = 0; k < wi; ++k) w_[k] = 0;
        if (i & 63) w_[wi] &= ~std::uint64_t{0} << (i & 63);
    }

    // next set bit at position >= from, or -1
    int next(int from) const {
        if (from >= nbits_) return -1;
        if (from < 0) from = 0;
        std::size_t wi = static_cast<std::size_t>(from) >> 6;
        std::uint64_t cur = w_[wi] >> (from & 63);
        if (cur) return from + std::countr_zero(cur);
        for (++wi; wi < w_.size(); ++wi)
            if (w_[wi]) return static_cast<int>(wi * 64) + std::countr_zero(w_[wi]);
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = next(0); v >= 0; v = next(v + 1)) out.push_back(v);
        return out;
    }

    static Bitset full(int nbits) {
        Bitset b(nbits);
        for (int i = 0; i < nbits; ++i) b.set(i);
        return b;
    }

    template <typename It>
    static Bitset of(int nbits, It first, It last) {
        Bitset b(nbits);
        for (; first != last; ++first) b.set(static_cast<int>(*first));
        return b;
    }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace chroma
