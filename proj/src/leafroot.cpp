#include "leafpower/leafroot.hpp"

#include <algorithm>
#include <set>

namespace leafpower {

std::vector<std::string> linear_root_errors(const LinearLeafRoot& r) {
    std::vector<std::string> errors;
    size_t n = r.spine.size();
    if (r.legs.size() != n) errors.push_back("leg count does not match spine length");
    if (n > 0 && r.gaps.size() != n - 1) errors.push_back("gap count must be spine length minus one");
    std::set<std::string> seen;
    for (const auto& v : r.spine)
        if (!seen.insert(v).second) errors.push_back("repeated spine vertex: " + v);
    for (size_t i = 0; i < r.gaps.size(); ++i)
        if (!((r.gaps[i] >= 0 && r.gaps[i] <= 1) || r.gaps[i] == 2))
            errors.push_back("gap " + std::to_string(i) + " outside [0,1] and not the boundary value 2");
    for (size_t i = 0; i < r.legs.size(); ++i)
        if (r.legs[i] < 0 || r.legs[i] > 1)
            errors.push_back("leg " + std::to_string(i) + " outside [0,1]");
    return errors;
}

Rat linear_root_distance(const LinearLeafRoot& r, int i, int j) {
    if (i == j) return Rat(0);
    if (i > j) std::swap(i, j);
    Rat d = r.legs[i] + r.legs[j];
    for (int k = i; k < j; ++k) d += r.gaps[k];
    return d;
}

VerifyReport verify_linear_leafroot(const Graph& g, const LinearLeafRoot& r) {
    VerifyReport rep;
    rep.errors = linear_root_errors(r);
    std::vector<int> vertex_of;  // spine position -> graph index
    for (const auto& name : r.spine) {
        int idx = g.index_of(name);
        if (idx < 0) rep.errors.push_back("spine vertex not in graph: " + name);
        vertex_of.push_back(idx);
    }
    if (int(r.spine.size()) != g.n())
        rep.errors.push_back("spine does not cover the graph's vertex set");
    if (!rep.errors.empty()) return rep;

    int n = g.n();
    // Prefix sums make each pairwise distance a constant-time query.
    std::vector<Rat> pre(n, Rat(0));
    for (int i = 1; i < n; ++i) pre[i] = pre[i - 1] + r.gaps[i - 1];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat d = r.legs[i] + r.legs[j] + pre[j] - pre[i];
            bool in_model = d <= 1;
            bool in_graph = g.has_edge(vertex_of[i], vertex_of[j]);
            if (in_model != in_graph)
                rep.mismatches.push_back({g.name(vertex_of[i]), g.name(vertex_of[j]), in_graph, in_model});
        }
    rep.ok = rep.mismatches.empty();
    return rep;
}

Graph linear_root_induced_graph(const LinearLeafRoot& r) {
    auto errors = linear_root_errors(r);
    if (!errors.empty()) throw InputError("malformed caterpillar root: " + errors.front());
    int n = int(r.spine.size());
    std::vector<Rat> pre(std::max(n, 1), Rat(0));
    for (int i = 1; i < n; ++i) pre[i] = pre[i - 1] + r.gaps[i - 1];
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (r.legs[i] + r.legs[j] + pre[j] - pre[i] <= 1) edges.emplace_back(i, j);
    return Graph(r.spine, edges);
}

VerifyReport verify_general_leafroot(const Graph& g, const GeneralLeafRoot& r) {
    VerifyReport rep;
    int k = int(r.node_names.size());
    std::map<std::string, int> node_index;
    for (int i = 0; i < k; ++i)
        if (!node_index.emplace(r.node_names[i], i).second)
            rep.errors.push_back("repeated tree node name: " + r.node_names[i]);
    if (int(r.edges.size()) != k - 1) rep.errors.push_back("tree must have exactly n-1 edges");
    std::vector<std::vector<std::pair<int, Rat>>> adj(k);
    for (const auto& e : r.edges) {
        if (e.u < 0 || e.u >= k || e.v < 0 || e.v >= k || e.u == e.v) {
            rep.errors.push_back("tree edge with bad endpoints");
            continue;
        }
        if (e.w < 0 || e.w > 1) rep.errors.push_back("tree edge weight outside [0,1]");
        adj[e.u].emplace_back(e.v, e.w);
        adj[e.v].emplace_back(e.u, e.w);
    }
    if (!rep.errors.empty()) return rep;

    // Connectivity: with exactly k-1 edges this also rules out cycles.
    std::vector<bool> seen(k, false);
    std::vector<int> stack;
    if (k > 0) {
        stack.push_back(0);
        seen[0] = true;
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto& [w, len] : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    if (std::count(seen.begin(), seen.end(), true) != k) {
        rep.errors.push_back("tree is not connected");
        return rep;
    }

    std::set<int> leaves;
    for (int i = 0; i < k; ++i)
        if (adj[i].size() <= 1 && k > 1) leaves.insert(i);
    if (k == 1) leaves.insert(0);

    std::vector<int> leaf_of_vertex(g.n(), -1);
    std::set<int> used;
    for (int v = 0; v < g.n(); ++v) {
        auto it = r.leaf_of.find(g.name(v));
        if (it == r.leaf_of.end()) {
            rep.errors.push_back("graph vertex without a leaf: " + g.name(v));
            continue;
        }
        auto nd = node_index.find(it->second);
        if (nd == node_index.end()) {
            rep.errors.push_back("leaf map names unknown tree node: " + it->second);
            continue;
        }
        if (!leaves.count(nd->second)) {
            rep.errors.push_back("vertex mapped to a non-leaf node: " + g.name(v));
            continue;
        }
        if (!used.insert(nd->second).second) {
            rep.errors.push_back("two vertices share tree node: " + it->second);
            continue;
        }
        leaf_of_vertex[v] = nd->second;
    }
    if (int(r.leaf_of.size()) != g.n())
        rep.errors.push_back("leaf map size does not match the vertex set");
    if (used.size() != leaves.size())
        rep.errors.push_back("tree has leaves that carry no graph vertex");
    if (!rep.errors.empty()) return rep;

    // All-pairs distances by one traversal per vertex.
    for (int u = 0; u < g.n(); ++u) {
        std::vector<Rat> dist(k, Rat(-1));
        std::vector<int> dfs{leaf_of_vertex[u]};
        dist[leaf_of_vertex[u]] = 0;
        while (!dfs.empty()) {
            int v = dfs.back();
            dfs.pop_back();
            for (auto& [w, len] : adj[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + len;
                    dfs.push_back(w);
                }
        }
        for (int v = u + 1; v < g.n(); ++v) {
            bool in_model = dist[leaf_of_vertex[v]] <= 1;
            bool in_graph = g.has_edge(u, v);
            if (in_model != in_graph)
                rep.mismatches.push_back({g.name(u), g.name(v), in_graph, in_model});
        }
    }
    rep.ok = rep.mismatches.empty();
    return rep;
}

LinearLeafRoot bluered_to_linear_leafroot(const Graph& g, const BlueRedModel& m) {
    auto pre = verify_bluered_model(g, m);
    if (!pre.ok) throw InputError("interval model does not verify against the graph");
    for (const auto& [name, iv] : m.intervals)
        if (iv.length() <= 0 || iv.length() > 1)
            throw InputError("interval lengths must lie in (0, 1]; normalize the model first");

    LinearLeafRoot root;
    bool first_comp = true;
    for (const auto& comp : g.components()) {
        std::vector<int> vs = comp.to_vector();
        std::stable_sort(vs.begin(), vs.end(), [&](int a, int b) {
            return m.intervals.at(g.name(a)).midpoint() < m.intervals.at(g.name(b)).midpoint();
        });
        for (size_t i = 0; i < vs.size(); ++i) {
            const RatInterval& iv = m.intervals.at(g.name(vs[i]));
            if (i == 0) {
                if (!first_comp) root.gaps.push_back(Rat(2));
            } else {
                Rat gap = iv.midpoint() - m.intervals.at(g.name(vs[i - 1])).midpoint();
                if (gap > 1)
                    throw std::logic_error("adjacent midpoints more than 1 apart inside a component");
                root.gaps.push_back(gap);
            }
            root.spine.push_back(g.name(vs[i]));
            Rat len = iv.length();
            root.legs.push_back(m.is_red(g.name(vs[i])) ? (1 + len) / 2 : (1 - len) / 2);
        }
        first_comp = false;
    }
    if (!verify_linear_leafroot(g, root).ok)
        throw std::logic_error("constructed caterpillar root failed re-verification");
    return root;
}

BlueRedModel linear_leafroot_to_bluered(const Graph& g, const LinearLeafRoot& r) {
    auto pre = verify_linear_leafroot(g, r);
    if (!pre.ok) throw InputError("caterpillar root does not verify against the graph");

    BlueRedModel m;
    Rat pos(0);
    for (size_t i = 0; i < r.spine.size(); ++i) {
        if (i > 0) pos += r.gaps[i - 1];
        Rat w = r.legs[i];
        Rat len = w <= Rat(1, 2) ? 1 - 2 * w : 2 * w - 1;
        if (w > Rat(1, 2)) m.red.insert(r.spine[i]);
        m.intervals[r.spine[i]] = {pos - len / 2, pos + len / 2};
    }
    if (!verify_bluered_model(g, m).ok)
        throw std::logic_error("constructed interval model failed re-verification");
    return m;
}

}  // namespace leafpower
