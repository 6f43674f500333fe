#include "leafpower/chordal.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

#include "leafpower/pq_tree.hpp"

namespace leafpower {

namespace {

// Maximum-cardinality search; returns a vertex order that is a perfect
// elimination order whenever g is chordal.
std::vector<int> mcs_order(const Graph& g) {
    int n = g.n();
    std::vector<int> weight(n, 0), picked;
    std::vector<bool> done(n, false);
    picked.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!done[v] && (best < 0 || weight[v] > weight[best])) best = v;
        done[best] = true;
        picked.push_back(best);
        for (int w : g.adj(best))
            if (!done[w]) ++weight[w];
    }
    std::reverse(picked.begin(), picked.end());
    return picked;
}

// Position of each vertex in the order.
std::vector<int> positions(const std::vector<int>& order, int n) {
    std::vector<int> pos(n, -1);
    for (int i = 0; i < int(order.size()); ++i) pos[order[i]] = i;
    return pos;
}

// Neighbors of v that appear after v in the order.
VertexSet later_neighbors(const Graph& g, const std::vector<int>& pos, int v) {
    VertexSet s(g.n());
    for (int w : g.adj(v))
        if (pos[w] > pos[v]) s.set(w);
    return s;
}

// Searches for an induced cycle of length >= 4 through v: picks
// non-adjacent neighbors a, b of v and a shortest a-b path avoiding the
// rest of v's closed neighborhood. A shortest path in that subgraph is
// induced, so the closed walk through v has no chord.
std::optional<std::vector<int>> chordless_cycle_through(const Graph& g, int v) {
    auto nbrs = g.adj(v).to_vector();
    for (size_t i = 0; i < nbrs.size(); ++i) {
        for (size_t j = i + 1; j < nbrs.size(); ++j) {
            int a = nbrs[i], b = nbrs[j];
            if (g.has_edge(a, b)) continue;
            VertexSet allowed = g.all() - g.closed_adj(v);
            allowed.set(a);
            allowed.set(b);
            std::vector<int> prev(g.n(), -2);
            std::queue<int> q;
            q.push(a);
            prev[a] = -1;
            while (!q.empty() && prev[b] == -2) {
                int u = q.front();
                q.pop();
                for (int w : g.adj(u))
                    if (allowed.test(w) && prev[w] == -2) {
                        prev[w] = u;
                        q.push(w);
                    }
            }
            if (prev[b] == -2) continue;
            std::vector<int> path;
            for (int u = b; u != -1; u = prev[u]) path.push_back(u);
            path.push_back(v);
            return path;
        }
    }
    return std::nullopt;
}

}  // namespace

ChordalResult recognize_chordal(const Graph& g) {
    auto order = mcs_order(g);
    auto pos = positions(order, g.n());
    int failing = -1;
    for (int i = 0; i < g.n() && failing < 0; ++i) {
        int v = order[i];
        VertexSet later = later_neighbors(g, pos, v);
        if (later.empty()) continue;
        int u = -1;
        for (int w : later)
            if (u < 0 || pos[w] < pos[u]) u = w;
        if (!later.without(u).is_subset_of(g.adj(u))) failing = v;
    }
    if (failing < 0) return EliminationOrder{order};
    // The failing vertex has two non-adjacent neighbors on a common cycle;
    // fall back to scanning every vertex for robustness.
    if (auto cyc = chordless_cycle_through(g, failing)) return ChordlessCycle{*cyc};
    for (int v = 0; v < g.n(); ++v)
        if (auto cyc = chordless_cycle_through(g, v)) return ChordlessCycle{*cyc};
    throw std::logic_error("elimination check failed but no chordless cycle found");
}

bool verify_elimination_order(const Graph& g, const EliminationOrder& peo) {
    if (int(peo.order.size()) != g.n()) return false;
    auto pos = positions(peo.order, g.n());
    for (int v = 0; v < g.n(); ++v)
        if (pos[v] < 0) return false;
    for (int v = 0; v < g.n(); ++v) {
        VertexSet later = later_neighbors(g, pos, v);
        for (int a : later)
            if (!later.without(a).is_subset_of(g.adj(a))) return false;
    }
    return true;
}

bool verify_chordless_cycle(const Graph& g, const ChordlessCycle& c) {
    int k = int(c.cycle.size());
    if (k < 4) return false;
    VertexSet seen(g.n());
    for (int v : c.cycle) {
        if (v < 0 || v >= g.n() || seen.test(v)) return false;
        seen.set(v);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.has_edge(c.cycle[i], c.cycle[j]) != consecutive) return false;
        }
    return true;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    auto res = recognize_chordal(g);
    auto* peo = std::get_if<EliminationOrder>(&res);
    if (!peo) throw InputError("maximal cliques by elimination require a chordal graph");
    auto pos = positions(peo->order, g.n());
    std::vector<VertexSet> cands;
    for (int v : peo->order) cands.push_back(later_neighbors(g, pos, v).with(v));
    std::vector<VertexSet> out;
    for (size_t i = 0; i < cands.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < cands.size() && !dominated; ++j)
            if (j != i && cands[i].is_subset_of(cands[j]) &&
                (cands[i] != cands[j] || j < i))
                dominated = true;
        if (!dominated) out.push_back(cands[i]);
    }
    return out;
}

bool verify_clique_path(const Graph& g, const CliquePath& p) {
    std::vector<VertexSet> expect;
    try {
        expect = maximal_cliques(g);
    } catch (const InputError&) {
        return false;
    }
    if (expect.size() != p.cliques.size()) return false;
    for (const auto& c : expect) {
        if (std::count(p.cliques.begin(), p.cliques.end(), c) != 1) return false;
    }
    for (int v = 0; v < g.n(); ++v) {
        int first = -1, last = -1, count = 0;
        for (int i = 0; i < int(p.cliques.size()); ++i)
            if (p.cliques[i].test(v)) {
                if (first < 0) first = i;
                last = i;
                ++count;
            }
        if (count == 0 || last - first + 1 != count) return false;
    }
    return true;
}

std::optional<CliquePath> recognize_interval(const Graph& g) {
    if (g.n() == 0) return CliquePath{};
    auto chord = recognize_chordal(g);
    if (!std::holds_alternative<EliminationOrder>(chord)) return std::nullopt;
    auto cliques = maximal_cliques(g);
    std::vector<std::vector<int>> rows(g.n());
    for (int i = 0; i < int(cliques.size()); ++i)
        for (int v : cliques[i]) rows[v].push_back(i);
    auto order = consecutive_ones_order(int(cliques.size()), rows);
    if (!order) return std::nullopt;
    CliquePath path;
    for (int i : *order) path.cliques.push_back(cliques[i]);
    assert(verify_clique_path(g, path));
    return path;
}

std::optional<CliquePath> is_x_interval(const Graph& g, const VertexSet& x) {
    if (!g.is_maximal_clique(x))
        throw InputError("end-clique arrangement requires a maximal clique");

    // Extended graph: pendant path u - v beyond x, with v adjacent to all
    // of x. A clique path of it must end [..., {v} u x, {u, v}]; stripping
    // the pendant pair yields a path of g that can be rotated to end at x.
    auto fresh = [&](std::string base) {
        while (g.index_of(base) >= 0) base += "'";
        return base;
    };
    std::string un = fresh("__end_probe_u"), vn = fresh("__end_probe_v");
    std::vector<std::string> names = g.names();
    int iu = int(names.size());
    names.push_back(un);
    int iv = int(names.size());
    names.push_back(vn);
    auto edges = g.edges();
    edges.emplace_back(iu, iv);
    for (int w : x) edges.emplace_back(iv, w);
    Graph ext(names, edges);

    auto path = recognize_interval(ext);
    if (!path) return std::nullopt;

    VertexSet pendant = VertexSet::of(ext.n(), {iu, iv});
    int ia = -1, id = -1;
    VertexSet xext(ext.n());
    for (int w : x) xext.set(w);
    VertexSet dset = xext.with(iv);
    for (int i = 0; i < int(path->cliques.size()); ++i) {
        if (path->cliques[i] == pendant) ia = i;
        if (path->cliques[i] == dset) id = i;
    }
    if (ia < 0 || id < 0 || (id != ia + 1 && id != ia - 1))
        throw std::logic_error("pendant pair misplaced in extended clique path");
    if (id < ia) {
        std::reverse(path->cliques.begin(), path->cliques.end());
        int k = int(path->cliques.size());
        ia = k - 1 - ia;
        id = k - 1 - id;
    }

    // Segments left of the pendant pair and right of the x-clique are
    // clique sets of separate components; list the left part, the reversed
    // right part, then x itself.
    CliquePath out;
    auto shrink = [&](const VertexSet& s) {
        VertexSet r(g.n());
        for (int w : s)
            if (w < g.n()) r.set(w);
        return r;
    };
    for (int i = 0; i < ia; ++i) out.cliques.push_back(shrink(path->cliques[i]));
    for (int i = int(path->cliques.size()) - 1; i > id; --i)
        out.cliques.push_back(shrink(path->cliques[i]));
    out.cliques.push_back(shrink(dset));
    if (!verify_clique_path(g, out)) return std::nullopt;
    if (out.cliques.back() != x) return std::nullopt;
    return out;
}

}  // namespace leafpower
