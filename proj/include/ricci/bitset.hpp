#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ricci {

// Fixed-size dynamic bitset with the handful of row operations the
// enumeration filters need. Indices are vertices.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return n_; }

    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }

    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    // this \ o
    Bitset& operator-=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    bool operator==(const Bitset&) const = default;

    // Calls f(i) for every set bit, ascending.
    template <class F>
    void for_each(F&& f) const {
        for (size_t b = 0; b < w_.size(); ++b) {
            uint64_t w = w_[b];
            while (w) {
                int i = static_cast<int>(b << 6) + std::countr_zero(w);
                f(i);
                w &= w - 1;
            }
        }
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // True iff this is a subset of o.
    bool subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace ricci
