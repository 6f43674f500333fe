#include "leafpower/nes.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace leafpower {

namespace {

// Node adjacency with edge indices, rebuilt on demand (trees are small).
std::vector<std::vector<std::pair<int, int>>> tree_adjacency(const EmbeddedTree& t) {
    std::vector<std::vector<std::pair<int, int>>> adj(t.node_count());
    for (int e = 0; e < int(t.edges.size()); ++e) {
        adj[t.edges[e].u].emplace_back(t.edges[e].v, e);
        adj[t.edges[e].v].emplace_back(t.edges[e].u, e);
    }
    return adj;
}

std::vector<Rat> distances_from_node(const EmbeddedTree& t, int src) {
    auto adj = tree_adjacency(t);
    std::vector<Rat> dist(t.node_count(), Rat(-1));
    std::vector<int> stack{src};
    dist[src] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, e] : adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + t.edges[e].len;
                stack.push_back(w);
            }
    }
    return dist;
}

// (node, cost) pairs through which a point can leave its edge.
std::vector<std::pair<int, Rat>> exits(const EmbeddedTree& t, const TreePoint& p) {
    if (p.is_node()) return {{p.node, Rat(0)}};
    const auto& e = t.edges[p.edge];
    return {{e.u, p.offset}, {e.v, e.len - p.offset}};
}

std::string fresh_node_name(const std::set<std::string>& used, const std::string& base) {
    std::string name = base;
    int k = 0;
    while (used.count(name)) name = base + std::to_string(k++);
    return name;
}

std::string fresh_node_name(const EmbeddedTree& t, const std::string& base) {
    return fresh_node_name(std::set<std::string>(t.node_names.begin(), t.node_names.end()),
                           base);
}

// Splits edge e at interior offset; returns the new node's index. Ball
// centers on the split edge are reattached to the correct half.
int model_split_edge(NesModel& m, int e, const Rat& off) {
    assert(off > 0 && off < m.tree.edges[e].len);
    int w = m.tree.node_count();
    m.tree.node_names.push_back(fresh_node_name(m.tree, "j"));
    int v = m.tree.edges[e].v;
    Rat tail = m.tree.edges[e].len - off;
    m.tree.edges[e].v = w;
    m.tree.edges[e].len = off;
    int e2 = int(m.tree.edges.size());
    m.tree.edges.push_back({w, v, tail});
    for (auto& [name, ball] : m.subtrees) {
        if (ball.center.edge != e) continue;
        if (ball.center.offset == off)
            ball.center = node_point(w);
        else if (ball.center.offset > off)
            ball.center = edge_point(e2, ball.center.offset - off);
    }
    return w;
}

// Ensures u's ball center is a node, splitting an edge when needed.
int materialize_center(NesModel& m, const std::string& u) {
    Ball& b = m.subtrees.at(u);
    b.center = canonical_point(m.tree, b.center);
    if (b.center.is_node()) return b.center.node;
    int w = model_split_edge(m, b.center.edge, b.center.offset);
    return w;
}

std::vector<bool> induced_adjacency_bits(const NesModel& m) {
    std::vector<bool> bits;
    for (auto a = m.subtrees.begin(); a != m.subtrees.end(); ++a)
        for (auto b = std::next(a); b != m.subtrees.end(); ++b)
            bits.push_back(balls_intersect(m.tree, a->second, b->second));
    return bits;
}

// Shared head of the closure operations: coverage and model-vs-(g minus u)
// verification.
Graph check_closure_premise(const NesModel& m, const Graph& g, const std::string& u) {
    int iu = g.index_of(u);
    if (iu < 0) throw InputError("vertex not in graph: " + u);
    if (m.subtrees.count(u)) throw InputError("model already carries a subtree for: " + u);
    Graph h = g.induced(g.all().without(iu));
    auto rep = verify_nes_model(h, m);
    if (!rep.ok) throw InputError("model does not verify against the graph minus " + u);
    return h;
}

void reverify_against(const Graph& g, const NesModel& m, const char* what) {
    if (!verify_nes_model(g, m).ok)
        throw std::logic_error(std::string(what) + ": extended model failed re-verification");
}

}  // namespace

std::vector<std::string> tree_errors(const EmbeddedTree& t) {
    std::vector<std::string> errors;
    int k = t.node_count();
    if (k == 0) errors.push_back("tree needs at least one node");
    std::set<std::string> names;
    for (const auto& n : t.node_names) {
        if (n.empty()) errors.push_back("empty tree node name");
        if (!names.insert(n).second) errors.push_back("repeated tree node name: " + n);
    }
    if (int(t.edges.size()) != std::max(0, k - 1))
        errors.push_back("tree must have node count minus one edges");
    for (const auto& e : t.edges) {
        if (e.u < 0 || e.u >= k || e.v < 0 || e.v >= k || e.u == e.v)
            errors.push_back("tree edge with bad endpoints");
        else if (e.len <= 0)
            errors.push_back("tree edge with non-positive length");
    }
    if (!errors.empty()) return errors;
    if (k > 0) {
        auto dist = distances_from_node(t, 0);
        for (int v = 0; v < k; ++v)
            if (dist[v] < 0) {
                errors.push_back("tree is not connected");
                break;
            }
    }
    return errors;
}

TreePoint node_point(int v) {
    TreePoint p;
    p.node = v;
    return p;
}

TreePoint edge_point(int e, const Rat& offset) {
    TreePoint p;
    p.edge = e;
    p.offset = offset;
    return p;
}

TreePoint canonical_point(const EmbeddedTree& t, const TreePoint& p) {
    if (p.is_node()) {
        if (p.node >= t.node_count()) throw InputError("tree point names a missing node");
        return node_point(p.node);
    }
    if (p.edge < 0 || p.edge >= int(t.edges.size()))
        throw InputError("tree point names a missing edge");
    const auto& e = t.edges[p.edge];
    if (p.offset < 0 || p.offset > e.len) throw InputError("tree point offset outside its edge");
    if (p.offset == 0) return node_point(e.u);
    if (p.offset == e.len) return node_point(e.v);
    return p;
}

Rat point_distance(const EmbeddedTree& t, const TreePoint& a, const TreePoint& b) {
    TreePoint ca = canonical_point(t, a), cb = canonical_point(t, b);
    if (ca == cb) return Rat(0);
    if (!ca.is_node() && !cb.is_node() && ca.edge == cb.edge) return abs(ca.offset - cb.offset);
    Rat best(-1);
    for (auto& [na, costa] : exits(t, ca)) {
        auto dist = distances_from_node(t, na);
        for (auto& [nb, costb] : exits(t, cb)) {
            Rat d = costa + dist[nb] + costb;
            if (best < 0 || d < best) best = d;
        }
    }
    return best;
}

TreePoint point_on_path(const EmbeddedTree& t, const TreePoint& a, const TreePoint& b,
                        const Rat& d) {
    TreePoint ca = canonical_point(t, a), cb = canonical_point(t, b);
    Rat total = point_distance(t, ca, cb);
    if (d < 0 || d > total) throw InputError("path point distance out of range");
    if (ca == cb) return ca;
    if (!ca.is_node() && !cb.is_node() && ca.edge == cb.edge) {
        Rat off = cb.offset > ca.offset ? ca.offset + d : ca.offset - d;
        return canonical_point(t, edge_point(ca.edge, off));
    }

    // Choose the exit pair realizing the distance; it is unique because
    // edge lengths are positive.
    int na = -1, nb = -1;
    Rat costa, costb;
    for (auto& [xa, cax] : exits(t, ca)) {
        auto dist = distances_from_node(t, xa);
        for (auto& [xb, cbx] : exits(t, cb))
            if (cax + dist[xb] + cbx == total) {
                na = xa;
                nb = xb;
                costa = cax;
                costb = cbx;
            }
    }
    assert(na >= 0 && nb >= 0);
    if (d <= costa) {
        // Still on a's edge, moving toward na.
        if (ca.is_node()) return ca;  // costa == 0 forces d == 0
        Rat off = (na == t.edges[ca.edge].u) ? ca.offset - d : ca.offset + d;
        return canonical_point(t, edge_point(ca.edge, off));
    }
    if (d >= total - costb) {
        Rat back = total - d;
        if (cb.is_node()) return cb;
        Rat off = (nb == t.edges[cb.edge].u) ? cb.offset - back : cb.offset + back;
        return canonical_point(t, edge_point(cb.edge, off));
    }

    // Walk the node path from na to nb.
    auto adj = tree_adjacency(t);
    std::vector<int> prev_node(t.node_count(), -2), prev_edge(t.node_count(), -1);
    std::vector<int> stack{na};
    prev_node[na] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, e] : adj[v])
            if (prev_node[w] == -2) {
                prev_node[w] = v;
                prev_edge[w] = e;
                stack.push_back(w);
            }
    }
    std::vector<std::pair<int, int>> rev;  // (node, edge used to reach it)
    for (int v = nb; v != na; v = prev_node[v]) rev.emplace_back(v, prev_edge[v]);
    std::reverse(rev.begin(), rev.end());

    Rat cum = costa;
    int at = na;
    for (auto& [nxt, e] : rev) {
        Rat step = t.edges[e].len;
        if (cum + step > d) {
            Rat within = d - cum;
            Rat off = (t.edges[e].u == at) ? within : step - within;
            return canonical_point(t, edge_point(e, off));
        }
        cum += step;
        at = nxt;
        if (cum == d) return node_point(at);
    }
    throw std::logic_error("path walk exhausted before reaching the target distance");
}

std::vector<std::string> nes_model_errors(const NesModel& m) {
    std::vector<std::string> errors = tree_errors(m.tree);
    if (!errors.empty()) return errors;
    for (const auto& [name, ball] : m.subtrees) {
        if (ball.radius < 0) errors.push_back("negative radius at: " + name);
        try {
            canonical_point(m.tree, ball.center);
        } catch (const InputError& e) {
            errors.push_back("bad center at " + name + ": " + e.what());
        }
    }
    return errors;
}

bool balls_intersect(const EmbeddedTree& t, const Ball& a, const Ball& b) {
    return point_distance(t, a.center, b.center) <= a.radius + b.radius;
}

std::optional<Ball> balls_intersection(const EmbeddedTree& t, const Ball& a, const Ball& b) {
    Rat d = point_distance(t, a.center, b.center);
    if (d > a.radius + b.radius) return std::nullopt;
    if (d + a.radius <= b.radius) return a;  // a inside b
    if (d + b.radius <= a.radius) return b;
    Ball out;
    out.center = point_on_path(t, a.center, b.center, (d + a.radius - b.radius) / 2);
    out.radius = (a.radius + b.radius - d) / 2;
    return out;
}

VerifyReport verify_nes_model(const Graph& g, const NesModel& m) {
    VerifyReport rep;
    rep.errors = nes_model_errors(m);
    for (const auto& [name, ball] : m.subtrees)
        if (g.index_of(name) < 0) rep.errors.push_back("subtree for unknown vertex: " + name);
    for (int v = 0; v < g.n(); ++v)
        if (!m.subtrees.count(g.name(v)))
            rep.errors.push_back("vertex without subtree: " + g.name(v));
    if (!rep.errors.empty()) return rep;

    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            bool in_model =
                balls_intersect(m.tree, m.subtrees.at(g.name(u)), m.subtrees.at(g.name(v)));
            bool in_graph = g.has_edge(u, v);
            if (in_model != in_graph)
                rep.mismatches.push_back({g.name(u), g.name(v), in_graph, in_model});
        }
    rep.ok = rep.mismatches.empty();
    return rep;
}

Graph nes_induced_graph(const NesModel& m) {
    auto errors = nes_model_errors(m);
    if (!errors.empty()) throw InputError("malformed subtree model: " + errors.front());
    std::vector<std::string> names;
    for (const auto& [name, ball] : m.subtrees) names.push_back(name);
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            if (balls_intersect(m.tree, m.subtrees.at(names[i]), m.subtrees.at(names[j])))
                edges.emplace_back(int(i), int(j));
    return Graph(std::move(names), edges);
}

// A line this long, grafted anywhere, ends beyond every subtree's reach.
static Rat escape_length(const NesModel& m) {
    Rat len(0);
    for (const auto& e : m.tree.edges) len += e.len;
    Rat rad(0);
    for (const auto& [name, ball] : m.subtrees) rad = std::max(rad, ball.radius);
    return len + rad + 1;
}

NesModel isolate(const NesModel& m, const std::string& u) {
    if (!m.subtrees.count(u)) throw InputError("no subtree for vertex: " + u);
    auto errors = nes_model_errors(m);
    if (!errors.empty()) throw InputError("malformed subtree model: " + errors.front());

    std::vector<bool> before = induced_adjacency_bits(m);
    Rat reach = escape_length(m);
    NesModel out = m;
    int at = materialize_center(out, u);

    int far = out.tree.node_count();
    out.tree.node_names.push_back(fresh_node_name(out.tree, "iso"));
    out.tree.edges.push_back({at, far, reach});
    Ball& bu = out.subtrees.at(u);
    bu.center = node_point(far);
    bu.radius += reach;

    if (induced_adjacency_bits(out) != before)
        throw std::logic_error("isolation changed the induced adjacency");
    for (const auto& [name, ball] : out.subtrees)
        if (name != u &&
            point_distance(out.tree, ball.center, bu.center) <= ball.radius)
            throw std::logic_error("another subtree still contains the isolated center");
    return out;
}

NesModel add_universal(const NesModel& m, const Graph& g) {
    std::string u;
    for (int v = 0; v < g.n(); ++v)
        if (!m.subtrees.count(g.name(v))) {
            if (!u.empty())
                throw InputError("model must cover all but one vertex of the graph");
            u = g.name(v);
        }
    if (u.empty()) throw InputError("model already covers the whole graph");
    check_closure_premise(m, g, u);
    if (g.degree(g.index_of(u)) != g.n() - 1)
        throw InputError("vertex is not universal: " + u);

    NesModel out = m;
    Rat total(0);
    for (const auto& e : out.tree.edges) total += e.len;
    out.subtrees[u] = Ball{node_point(0), total + 1};
    reverify_against(g, out, "universal extension");
    return out;
}

NesModel add_pendant(const NesModel& m, const Graph& g, const std::string& u,
                     const std::string& x) {
    check_closure_premise(m, g, u);
    int iu = g.index_of(u), ix = g.index_of(x);
    if (ix < 0) throw InputError("vertex not in graph: " + x);
    if (g.adj(iu) != VertexSet::of(g.n(), {ix}))
        throw InputError("vertex is not pendant on the named neighbor: " + u);

    NesModel out = isolate(m, x);
    out.subtrees[u] = Ball{out.subtrees.at(x).center, Rat(0)};
    reverify_against(g, out, "pendant extension");
    return out;
}

namespace {

// Common intersection of the neighborhood's subtrees; the premise
// guarantees pairwise intersection, and subtrees of a tree satisfy the
// Helly property, so the fold stays nonempty.
Ball neighborhood_fold(const NesModel& m, const Graph& g, int iu) {
    std::optional<Ball> fold;
    for (int w : g.adj(iu)) {
        const Ball& bw = m.subtrees.at(g.name(w));
        fold = fold ? balls_intersection(m.tree, *fold, bw) : bw;
        if (!fold)
            throw std::logic_error("neighborhood subtrees share no common point");
    }
    return *fold;
}

}  // namespace

NesModel add_simplicial_max_clique(const NesModel& m, const Graph& g, const std::string& u) {
    Graph h = check_closure_premise(m, g, u);
    int iu = g.index_of(u);
    if (g.adj(iu).empty()) throw InputError("vertex has no neighbors: " + u);
    VertexSet nbrs_in_h(h.n());
    for (int w : g.adj(iu)) nbrs_in_h.set(h.index_of(g.name(w)));
    if (!h.is_maximal_clique(nbrs_in_h))
        throw InputError("neighborhood is not a maximal clique of the graph minus " + u);

    NesModel out = m;
    Ball fold = neighborhood_fold(out, g, iu);
    out.subtrees[u] = Ball{canonical_point(out.tree, fold.center), Rat(0)};
    reverify_against(g, out, "maximal-clique extension");
    return out;
}

NesModel add_min_separator(const NesModel& m, const Graph& g, const std::string& u) {
    Graph h = check_closure_premise(m, g, u);
    int iu = g.index_of(u);
    if (g.adj(iu).empty()) throw InputError("vertex has no neighbors: " + u);
    VertexSet sep(h.n());
    for (int w : g.adj(iu)) sep.set(h.index_of(g.name(w)));
    if (!h.is_clique(sep))
        throw InputError("neighborhood must form a clique in the graph minus " + u);

    // Minimal separator: at least two components of h - sep see all of it.
    Graph rest = h.induced(h.all() - sep);
    int full = 0;
    for (const auto& comp : rest.components()) {
        VertexSet seen(h.n());
        for (int v : comp) seen |= h.adj(h.index_of(rest.name(v)));
        if (sep.is_subset_of(seen)) ++full;
    }
    if (full < 2)
        throw InputError("neighborhood is not a minimal separator of the graph minus " + u);

    NesModel out = m;
    Ball fold = neighborhood_fold(out, g, iu);
    Rat line_len = escape_length(out);
    out.subtrees[u] = Ball{canonical_point(out.tree, fold.center), Rat(0)};
    // Walk to the fold's boundary along a fresh line: the farthest point of
    // the new line still inside the fold lies at distance fold.radius.
    materialize_center(out, u);
    int at = out.subtrees.at(u).center.node;
    int far = out.tree.node_count();
    out.tree.node_names.push_back(fresh_node_name(out.tree, "sep"));
    int e = int(out.tree.edges.size());
    out.tree.edges.push_back({at, far, line_len});
    out.subtrees.at(u).center = canonical_point(out.tree, edge_point(e, fold.radius));
    reverify_against(g, out, "separator extension");
    return out;
}

NesModel merge_at_cut_vertex(const std::vector<NesModel>& parts, const std::string& u,
                             const Graph& g) {
    int iu = g.index_of(u);
    if (iu < 0) throw InputError("vertex not in graph: " + u);

    // Components of g minus u, each extended back by u.
    std::vector<std::set<std::string>> expected;
    Graph rest = g.induced(g.all().without(iu));
    for (const auto& comp : rest.components()) {
        std::set<std::string> names{u};
        for (int v : comp) names.insert(rest.name(v));
        expected.push_back(std::move(names));
    }
    if (parts.size() != expected.size())
        throw InputError("part count does not match the component count around " + u);

    std::vector<int> part_of(expected.size(), -1);
    std::vector<bool> used(parts.size(), false);
    for (size_t c = 0; c < expected.size(); ++c) {
        for (size_t p = 0; p < parts.size(); ++p) {
            if (used[p]) continue;
            std::set<std::string> keys;
            for (const auto& [name, ball] : parts[p].subtrees) keys.insert(name);
            if (keys == expected[c]) {
                part_of[c] = int(p);
                used[p] = true;
                break;
            }
        }
        if (part_of[c] < 0)
            throw InputError("no part model covers one of the components around " + u);
    }

    NesModel merged;
    int center = 0;
    merged.tree.node_names.push_back("c");
    std::set<std::string> names_used{"c"};

    for (size_t c = 0; c < expected.size(); ++c) {
        const NesModel& part = parts[part_of[c]];
        VertexSet keep(g.n());
        keep.set(iu);
        for (const auto& name : expected[c]) keep.set(g.index_of(name));
        if (!verify_nes_model(g.induced(keep), part).ok)
            throw InputError("a part model does not verify against its component plus " + u);

        NesModel iso = isolate(part, u);
        Rat r = iso.subtrees.at(u).radius;  // > 0 after isolation
        for (auto& e : iso.tree.edges) e.len /= r;
        for (auto& [name, ball] : iso.subtrees) {
            ball.radius /= r;
            if (!ball.center.is_node()) ball.center.offset /= r;
        }

        int u_node = iso.subtrees.at(u).center.node;  // isolation makes it a node
        std::vector<int> remap(iso.tree.node_count(), -1);
        remap[u_node] = center;
        for (int v = 0; v < iso.tree.node_count(); ++v) {
            if (v == u_node) continue;
            std::string name = fresh_node_name(names_used, iso.tree.node_names[v]);
            names_used.insert(name);
            remap[v] = merged.tree.node_count();
            merged.tree.node_names.push_back(name);
        }
        int edge_base = int(merged.tree.edges.size());
        for (const auto& e : iso.tree.edges)
            merged.tree.edges.push_back({remap[e.u], remap[e.v], e.len});
        for (const auto& [name, ball] : iso.subtrees) {
            if (name == u) continue;
            Ball moved = ball;
            if (moved.center.is_node())
                moved.center = node_point(remap[moved.center.node]);
            else
                moved.center = edge_point(moved.center.edge + edge_base, moved.center.offset);
            merged.subtrees[name] = moved;
        }
    }
    merged.subtrees[u] = Ball{node_point(center), Rat(1)};
    reverify_against(g, merged, "cut-vertex assembly");
    return merged;
}

}  // namespace leafpower
