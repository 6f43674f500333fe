#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace leafpower {

// Set of vertex indices over a fixed universe [0, n), packed into 64-bit words.
// All binary operations require both operands to share the same universe size.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {
        assert(universe >= 0);
    }

    static VertexSet of(int universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int v : members) s.set(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.w_) w = ~0ULL;
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        assert(0 <= v && v < n_);
        return (w_[v >> 6] >> (v & 63)) & 1ULL;
    }

    void set(int v) {
        assert(0 <= v && v < n_);
        w_[v >> 6] |= 1ULL << (v & 63);
    }

    void reset(int v) {
        assert(0 <= v && v < n_);
        w_[v >> 6] &= ~(1ULL << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    VertexSet with(int v) const {
        VertexSet r = *this;
        r.set(v);
        return r;
    }

    VertexSet without(int v) const {
        VertexSet r = *this;
        r.reset(v);
        return r;
    }

    bool is_subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // Smallest member, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }

    // Smallest member greater than v, or -1 when none.
    int next(int v) const {
        ++v;
        if (v >= n_) return -1;
        size_t i = size_t(v) >> 6;
        std::uint64_t w = w_[i] >> (v & 63);
        if (w) return v + std::countr_zero(w);
        for (++i; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    // Iteration over members in increasing order, enabling range-for loops.
    class const_iterator {
    public:
        const_iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
        int operator*() const { return v_; }
        const_iterator& operator++() {
            v_ = s_->next(v_);
            return *this;
        }
        bool operator!=(const const_iterator& o) const { return v_ != o.v_; }

    private:
        const VertexSet* s_;
        int v_;
    };

    const_iterator begin() const { return const_iterator(this, first()); }
    const_iterator end() const { return const_iterator(this, -1); }

    // Strict total order (universe, then word-wise); used for canonical sorting.
    bool operator<(const VertexSet& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        for (size_t i = w_.size(); i-- > 0;)
            if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
        return false;
    }

private:
    void trim() {
        if (n_ % 64 != 0 && !w_.empty()) w_.back() &= (1ULL << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace leafpower
