#include "leafpower/pq_tree.hpp"

#include <algorithm>
#include <cassert>

namespace leafpower {

namespace {

// PQ-tree over a fixed leaf universe. P-node children may be permuted
// freely; Q-node children may only be reversed as a whole. Each reduction
// constrains one row's columns to be consecutive in every remaining
// frontier; the frontier of the reduced tree realizes all rows applied
// so far.
class PQTree {
public:
    explicit PQTree(int m) : m_(m) {
        leaf_.resize(m_);
        if (m_ == 0) return;
        if (m_ == 1) {
            root_ = make(Leaf, 0);
            leaf_[0] = root_;
            return;
        }
        root_ = make(P);
        for (int c = 0; c < m_; ++c) {
            int l = make(Leaf, c);
            leaf_[c] = l;
            node(root_).kids.push_back(l);
        }
    }

    bool reduce(const std::vector<int>& cols) {
        if (m_ == 0 || int(cols.size()) <= 1) return true;
        in_s_.assign(m_, false);
        total_ = 0;
        for (int c : cols) {
            assert(0 <= c && c < m_);
            if (!in_s_[c]) {
                in_s_[c] = true;
                ++total_;
            }
        }
        if (total_ <= 1) return true;

        cnt_.assign(nodes_.size(), 0);
        sz_.assign(nodes_.size(), 0);
        fill_counts(root_);

        // Pertinent root: deepest node whose subtree holds every marked leaf.
        int pr = root_;
        for (;;) {
            int down = -1;
            for (int k : node(pr).kids)
                if (cnt_[k] == total_) {
                    down = k;
                    break;
                }
            if (down < 0) break;
            pr = down;
        }
        return apply_root(pr);
    }

    std::vector<int> frontier() const {
        std::vector<int> out;
        if (root_ >= 0) collect(root_, out);
        return out;
    }

private:
    enum Kind { Leaf, P, Q };
    enum State { Empty, Full, Partial, Fail };

    struct Node {
        Kind kind;
        int col;
        std::vector<int> kids;
    };

    int make(Kind k, int col = -1) {
        nodes_.push_back({k, col, {}});
        return int(nodes_.size()) - 1;
    }
    Node& node(int i) { return nodes_[i]; }
    const Node& node(int i) const { return nodes_[i]; }

    void fill_counts(int v) {
        if (node(v).kind == Leaf) {
            sz_[v] = 1;
            cnt_[v] = in_s_[node(v).col] ? 1 : 0;
            return;
        }
        for (int k : node(v).kids) {
            fill_counts(k);
            sz_[v] += sz_[k];
            cnt_[v] += cnt_[k];
        }
    }

    // Wraps a child list in a single node: the child itself when alone, a
    // fresh P-node otherwise. Returns -1 for an empty list.
    int wrap(const std::vector<int>& kids) {
        if (kids.empty()) return -1;
        if (kids.size() == 1) return kids[0];
        int p = make(P);
        node(p).kids = kids;
        return p;
    }

    static void append(std::vector<int>& out, int v) {
        if (v >= 0) out.push_back(v);
    }

    // Non-root template application. On Partial, v has been rewritten as a
    // Q-node whose children run from the empty side to the full side.
    State apply(int v) {
        if (node(v).kind == Leaf) return in_s_[node(v).col] ? Full : Empty;
        if (cnt_[v] == 0) return Empty;
        if (cnt_[v] == sz_[v]) return Full;

        std::vector<int> kids = node(v).kids;
        std::vector<State> st(kids.size());
        std::vector<int> empty_kids, full_kids, partial_kids;
        for (size_t i = 0; i < kids.size(); ++i) {
            st[i] = apply(kids[i]);
            if (st[i] == Fail) return Fail;
            if (st[i] == Empty) empty_kids.push_back(kids[i]);
            if (st[i] == Full) full_kids.push_back(kids[i]);
            if (st[i] == Partial) partial_kids.push_back(kids[i]);
        }

        if (node(v).kind == P) {
            if (partial_kids.size() > 1) return Fail;
            std::vector<int> chain;
            append(chain, wrap(empty_kids));
            if (!partial_kids.empty())
                for (int k : node(partial_kids[0]).kids) chain.push_back(k);
            append(chain, wrap(full_kids));
            node(v).kind = Q;
            node(v).kids = chain;
            return Partial;
        }

        // Q-node: children must read empty*, at most one partial, full*
        // in one of the two directions.
        for (int dir = 0; dir < 2; ++dir) {
            size_t i = 0;
            while (i < kids.size() && st[i] == Empty) ++i;
            size_t partial_at = kids.size();
            if (i < kids.size() && st[i] == Partial) partial_at = i++;
            size_t full_from = i;
            while (i < kids.size() && st[i] == Full) ++i;
            if (i == kids.size()) {
                std::vector<int> chain(kids.begin(), kids.begin() + (partial_at < kids.size() ? partial_at : full_from));
                if (partial_at < kids.size())
                    for (int k : node(kids[partial_at]).kids) chain.push_back(k);
                chain.insert(chain.end(), kids.begin() + full_from, kids.end());
                node(v).kids = chain;
                return Partial;
            }
            std::reverse(kids.begin(), kids.end());
            std::reverse(st.begin(), st.end());
        }
        return Fail;
    }

    // Template application at the pertinent root; the marked leaves must end
    // up consecutive but the root keeps representing an unconstrained
    // placement relative to the unmarked remainder.
    bool apply_root(int v) {
        if (node(v).kind == Leaf) return true;
        if (cnt_[v] == sz_[v]) return true;

        std::vector<int> kids = node(v).kids;
        std::vector<State> st(kids.size());
        std::vector<int> empty_kids, full_kids, partial_kids;
        for (size_t i = 0; i < kids.size(); ++i) {
            st[i] = apply(kids[i]);
            if (st[i] == Fail) return false;
            if (st[i] == Empty) empty_kids.push_back(kids[i]);
            if (st[i] == Full) full_kids.push_back(kids[i]);
            if (st[i] == Partial) partial_kids.push_back(kids[i]);
        }

        if (node(v).kind == P) {
            if (partial_kids.size() > 2) return false;
            if (partial_kids.empty()) {
                if (full_kids.size() >= 2 && !empty_kids.empty()) {
                    std::vector<int> out = empty_kids;
                    append(out, wrap(full_kids));
                    node(v).kids = out;
                }
                return true;
            }
            std::vector<int> chain;
            for (int k : node(partial_kids[0]).kids) chain.push_back(k);
            append(chain, wrap(full_kids));
            if (partial_kids.size() == 2) {
                const auto& rk = node(partial_kids[1]).kids;
                for (auto it = rk.rbegin(); it != rk.rend(); ++it) chain.push_back(*it);
            }
            if (empty_kids.empty()) {
                node(v).kind = Q;
                node(v).kids = chain;
            } else {
                int q = make(Q);
                node(q).kids = chain;
                std::vector<int> out = empty_kids;
                out.push_back(q);
                node(v).kids = out;
            }
            return true;
        }

        // Q-root: non-empty children must be consecutive, all interior ones
        // full; a partial child at either end is flattened facing inward.
        size_t lo = kids.size(), hi = kids.size();
        for (size_t i = 0; i < kids.size(); ++i)
            if (st[i] != Empty) {
                if (lo == kids.size()) lo = i;
                hi = i;
            }
        assert(lo != kids.size());
        for (size_t i = lo; i <= hi; ++i) {
            if (st[i] == Empty) return false;
            if (i > lo && i < hi && st[i] != Full) return false;
        }
        std::vector<int> chain(kids.begin(), kids.begin() + lo);
        if (st[lo] == Partial) {
            for (int k : node(kids[lo]).kids) chain.push_back(k);
        } else {
            chain.push_back(kids[lo]);
        }
        for (size_t i = lo + 1; i < hi; ++i) chain.push_back(kids[i]);
        if (hi > lo) {
            if (st[hi] == Partial) {
                const auto& rk = node(kids[hi]).kids;
                for (auto it = rk.rbegin(); it != rk.rend(); ++it) chain.push_back(*it);
            } else {
                chain.push_back(kids[hi]);
            }
        }
        chain.insert(chain.end(), kids.begin() + hi + 1, kids.end());
        node(v).kids = chain;
        return true;
    }

    void collect(int v, std::vector<int>& out) const {
        if (node(v).kind == Leaf) {
            out.push_back(node(v).col);
            return;
        }
        for (int k : node(v).kids) collect(k, out);
    }

    int m_;
    int root_ = -1;
    std::vector<Node> nodes_;
    std::vector<int> leaf_;
    std::vector<bool> in_s_;
    std::vector<int> cnt_, sz_;
    int total_ = 0;
};

}  // namespace

std::optional<std::vector<int>> consecutive_ones_order(int columns,
                                                       const std::vector<std::vector<int>>& rows) {
    PQTree tree(columns);
    for (const auto& row : rows)
        if (!tree.reduce(row)) return std::nullopt;
    return tree.frontier();
}

}  // namespace leafpower
