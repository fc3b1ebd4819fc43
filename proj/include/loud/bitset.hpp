#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace loud {

// Dynamic bitset with word-level set operations.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(size_t n, bool value = false)
        : n_(n), w_((n + 63) / 64, value ? ~uint64_t{0} : 0) {
        trim();
    }

    size_t size() const { return n_; }
    bool test(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(size_t i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    void assign(size_t i, bool v) { v ? set(i) : reset(i); }

    size_t count() const {
        size_t c = 0;
        for (uint64_t x : w_) c += static_cast<size_t>(std::popcount(x));
        return c;
    }
    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& subtract(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    Bitset operator~() const {
        Bitset r(*this);
        for (auto& x : r.w_) x = ~x;
        r.trim();
        return r;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    // First set index >= from, or size() if none.
    size_t next(size_t from) const {
        if (from >= n_) return n_;
        size_t wi = from >> 6;
        uint64_t x = w_[wi] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (x) return std::min(n_, (wi << 6) + static_cast<size_t>(std::countr_zero(x)));
            if (++wi >= w_.size()) return n_;
            x = w_[wi];
        }
    }
    size_t first() const { return next(0); }

    template <class F>
    void for_each(F&& f) const {
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t x = w_[wi];
            while (x) {
                f((wi << 6) + static_cast<size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

    size_t hash() const {
        size_t h = n_;
        for (uint64_t x : w_) h = h * 1000003u ^ std::hash<uint64_t>{}(x);
        return h;
    }

    const std::vector<uint64_t>& words() const { return w_; }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
    }

    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

struct BitsetHash {
    size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace loud
