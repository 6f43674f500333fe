#include "leafpower/star_nes.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace leafpower {

namespace {

// True when u's neighborhood restricted to `block` sits inside every
// neighborhood from `among` (inclusion-minimal trace on that block).
bool minimal_in(const Graph& g, int u, const VertexSet& block, const VertexSet& among) {
    VertexSet trace = g.adj(u) & block;
    for (int y : among)
        if (y != u && !trace.is_subset_of(g.adj(y))) return false;
    return true;
}

// Connected pieces of g minus x, as vertex sets of g, ordered by smallest
// member.
std::vector<VertexSet> components_outside(const Graph& g, const VertexSet& x) {
    Graph rest = g.induced(g.all() - x);
    std::vector<VertexSet> out;
    for (const auto& comp : rest.components()) {
        VertexSet c(g.n());
        for (int v : comp) c.set(g.index_of(rest.name(v)));
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
    return out;
}

struct XIntervalView {
    Graph h;                         // induced graph on x + extra
    VertexSet xh;                    // x inside h
    std::optional<CliquePath> path;  // clique path of h ending in x
};

XIntervalView x_interval_view(const Graph& g, const VertexSet& x, const VertexSet& extra) {
    Graph h = g.induced(x | extra);
    VertexSet xh(h.n());
    for (int v : x) xh.set(h.index_of(g.name(v)));
    auto path = is_x_interval(h, xh);
    return {std::move(h), xh, std::move(path)};
}

bool x_interval_ok(const Graph& g, const VertexSet& x, const VertexSet& extra) {
    return x_interval_view(g, x, extra).path.has_value();
}

std::string names_of(const Graph& g, const VertexSet& s) {
    std::string out = "{";
    for (int v : s) {
        if (out.size() > 1) out += ", ";
        out += g.name(v);
    }
    return out + "}";
}

// Shared structural checks: components not split across blocks, every block
// extendable to a clique path ending in the central clique.
void check_block_properties(const Graph& g, const VertexSet& x,
                            const std::vector<VertexSet>& blocks,
                            std::vector<std::string>& errors) {
    for (const auto& comp : components_outside(g, x)) {
        bool inside_one = false;
        for (const auto& b : blocks)
            if (comp.is_subset_of(b)) {
                inside_one = true;
                break;
            }
        if (!inside_one)
            errors.push_back("connected piece " + names_of(g, comp) +
                             " outside the central clique is split across blocks");
    }
    for (const auto& b : blocks)
        if (!x_interval_ok(g, x, b))
            errors.push_back("block " + names_of(g, b) +
                             " has no clique path ending in the central clique");
}

}  // namespace

std::vector<std::string> star_model_errors(const StarNesModel& m) {
    std::vector<std::string> errors;
    int beta = int(m.rays.size());
    if (beta == 0) {
        errors.push_back("model needs at least one ray");
        return errors;
    }
    for (const Rat& len : m.rays)
        if (len <= 0) errors.push_back("ray with non-positive length");

    for (const auto& [name, reach] : m.central) {
        if (int(reach.size()) != beta) {
            errors.push_back("reach list size does not match the ray count at: " + name);
            continue;
        }
        for (int j = 0; j < beta; ++j)
            if (reach[j] < 0 || reach[j] > m.rays[j])
                errors.push_back("reach outside its ray at: " + name);
        if (beta >= 2) {
            std::vector<Rat> sorted = reach;
            std::sort(sorted.begin(), sorted.end());
            if (sorted[beta - 2] != sorted[0])
                errors.push_back("reach depths differ on more than one ray at: " + name);
        }
    }
    for (const auto& [name, seg] : m.blocks) {
        if (m.central.count(name))
            errors.push_back("vertex is both central and on a ray: " + name);
        if (seg.ray < 0 || seg.ray >= beta) {
            errors.push_back("segment on a missing ray at: " + name);
            continue;
        }
        if (!(0 < seg.lo && seg.lo <= seg.hi && seg.hi <= m.rays[seg.ray]))
            errors.push_back("segment range must satisfy 0 < lo <= hi <= ray length at: " +
                             name);
    }
    return errors;
}

bool star_adjacent(const StarNesModel& m, const std::string& a, const std::string& b) {
    auto ca = m.central.find(a), cb = m.central.find(b);
    auto sa = m.blocks.find(a), sb = m.blocks.find(b);
    if ((ca == m.central.end() && sa == m.blocks.end()) ||
        (cb == m.central.end() && sb == m.blocks.end()))
        throw InputError("vertex not present in the star model");
    if (ca != m.central.end() && cb != m.central.end()) return true;
    if (sa != m.blocks.end() && sb != m.blocks.end()) {
        if (sa->second.ray != sb->second.ray) return false;
        return std::max(sa->second.lo, sb->second.lo) <=
               std::min(sa->second.hi, sb->second.hi);
    }
    const auto& reach = (ca != m.central.end() ? ca : cb)->second;
    const auto& seg = (sa != m.blocks.end() ? sa : sb)->second;
    return reach[seg.ray] >= seg.lo;
}

VerifyReport verify_star_model(const Graph& g, const StarNesModel& m) {
    VerifyReport rep;
    rep.errors = star_model_errors(m);
    std::set<std::string> covered;
    for (const auto& [name, reach] : m.central) covered.insert(name);
    for (const auto& [name, seg] : m.blocks) covered.insert(name);
    for (const auto& name : covered)
        if (g.index_of(name) < 0) rep.errors.push_back("model covers unknown vertex: " + name);
    for (int v = 0; v < g.n(); ++v)
        if (!covered.count(g.name(v)))
            rep.errors.push_back("vertex missing from the model: " + g.name(v));
    if (!rep.errors.empty()) return rep;

    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            bool in_model = star_adjacent(m, g.name(u), g.name(v));
            bool in_graph = g.has_edge(u, v);
            if (in_model != in_graph)
                rep.mismatches.push_back({g.name(u), g.name(v), in_graph, in_model});
        }
    rep.ok = rep.mismatches.empty();
    return rep;
}

Graph star_induced_graph(const StarNesModel& m) {
    auto errors = star_model_errors(m);
    if (!errors.empty()) throw InputError("malformed star model: " + errors.front());
    std::vector<std::string> names;
    for (const auto& [name, reach] : m.central) names.push_back(name);
    for (const auto& [name, seg] : m.blocks) names.push_back(name);
    std::sort(names.begin(), names.end());
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            if (star_adjacent(m, names[i], names[j])) edges.emplace_back(int(i), int(j));
    return Graph(std::move(names), edges);
}

NesModel star_to_nes(const StarNesModel& m) {
    auto errors = star_model_errors(m);
    if (!errors.empty()) throw InputError("malformed star model: " + errors.front());
    int beta = int(m.rays.size());

    NesModel out;
    out.tree.node_names.push_back("c");
    for (int j = 0; j < beta; ++j) {
        out.tree.node_names.push_back("e" + std::to_string(j));
        out.tree.edges.push_back({0, j + 1, m.rays[j]});  // edge j covers ray j
    }

    for (const auto& [name, reach] : m.central) {
        // Common depth plus at most one deeper ray.
        Rat common = *std::min_element(reach.begin(), reach.end());
        int special = 0;
        for (int j = 0; j < beta; ++j)
            if (reach[j] > common) {
                special = j;
                break;
            }
        Rat deep = reach[special];
        Ball b;
        b.center = canonical_point(out.tree, edge_point(special, (deep - common) / 2));
        b.radius = (deep + common) / 2;
        out.subtrees[name] = b;
    }
    for (const auto& [name, seg] : m.blocks) {
        Ball b;
        b.center = canonical_point(out.tree, edge_point(seg.ray, (seg.lo + seg.hi) / 2));
        b.radius = (seg.hi - seg.lo) / 2;
        out.subtrees[name] = b;
    }

    if (!verify_nes_model(star_induced_graph(m), out).ok)
        throw std::logic_error("expanded star model failed re-verification");
    return out;
}

VertexSet notmin(const Graph& g, int x, const VertexSet& w, const Partition& a) {
    if (w.universe() != g.n() || a.ground().universe() != g.n())
        throw InputError("vertex sets over a different universe than the graph");
    if (x < 0 || x >= g.n() || !w.test(x))
        throw InputError("vertex must belong to the comparison set");
    VertexSet out(g.n());
    for (const auto& b : a.blocks())
        if (!minimal_in(g, x, b, w)) out |= b;
    return out;
}

bool is_removable(const Graph& g, int x, const VertexSet& y, const Partition& b) {
    if (y.universe() != g.n() || b.ground().universe() != g.n())
        throw InputError("vertex sets over a different universe than the graph");
    if (x < 0 || x >= g.n() || !y.test(x))
        throw InputError("vertex must belong to the comparison set");
    int bad = 0;
    for (const auto& blk : b.blocks())
        if (!minimal_in(g, x, blk, y) && ++bad > 1) return false;
    return true;
}

GoodPartitionCheck validate_good_partition(const Graph& g, const VertexSet& x,
                                           const Partition& b) {
    GoodPartitionCheck out;
    auto& errors = out.errors;
    if (x.universe() != g.n() || b.ground().universe() != g.n())
        throw InputError("vertex sets over a different universe than the graph");
    if (b.ground() != g.all() - x) {
        errors.push_back("blocks must partition exactly the vertices outside the central clique");
        return out;
    }
    if (!g.is_maximal_clique(x)) errors.push_back("central set is not a maximal clique");
    check_block_properties(g, x, b.blocks(), errors);

    std::vector<int> order;
    VertexSet y = x;
    while (!y.empty()) {
        int pick = -1;
        for (int cand : y)
            if (is_removable(g, cand, y, b)) {
                pick = cand;
                break;
            }
        if (pick < 0) {
            errors.push_back("no vertex of " + names_of(g, y) +
                             " has a trace minimal in all blocks but at most one");
            break;
        }
        order.push_back(pick);
        y.reset(pick);
    }
    if (errors.empty()) out.partition = GoodPartition{x, b, std::move(order)};
    return out;
}

VerifyReport good_partition_report(const Graph& g, const GoodPartition& gp) {
    VerifyReport rep;
    auto& errors = rep.errors;
    if (gp.central.universe() != g.n() || gp.blocks.ground().universe() != g.n()) {
        errors.push_back("certificate universe does not match the graph");
        return rep;
    }
    if (gp.blocks.ground() != g.all() - gp.central) {
        errors.push_back("blocks must partition exactly the vertices outside the central clique");
        return rep;
    }
    if (!g.is_maximal_clique(gp.central)) errors.push_back("central set is not a maximal clique");
    check_block_properties(g, gp.central, gp.blocks.blocks(), errors);

    std::set<int> seen;
    bool order_ok = int(gp.order.size()) == gp.central.count();
    for (int v : gp.order)
        if (v < 0 || v >= g.n() || !gp.central.test(v) || !seen.insert(v).second)
            order_ok = false;
    if (!order_ok) {
        errors.push_back("elimination order must list each central vertex exactly once");
    } else {
        VertexSet y = gp.central;
        for (int xi : gp.order) {
            if (!is_removable(g, xi, y, gp.blocks))
                errors.push_back(g.name(xi) +
                                 ": trace fails minimality in more than one block at its turn");
            y.reset(xi);
        }
    }
    rep.ok = errors.empty();
    return rep;
}

StarSearch find_good_partition_diagnose(const Graph& g) {
    StarSearch out;
    if (g.n() == 0) {
        out.partition = GoodPartition{VertexSet(0), Partition(VertexSet(0), {}), {}};
        return out;
    }
    auto chord = recognize_chordal(g);
    if (auto* cyc = std::get_if<ChordlessCycle>(&chord)) {
        out.rejection.cycle = *cyc;
        return out;
    }

    for (const VertexSet& x : maximal_cliques(g)) {
        std::vector<VertexSet> blocks = components_outside(g, x);
        std::string comp_failure;
        for (const auto& c : blocks)
            if (!x_interval_ok(g, x, c)) {
                comp_failure = "component " + names_of(g, c) +
                               " has no clique path ending in the clique";
                break;
            }
        if (!comp_failure.empty()) {
            out.rejection.clique_log.emplace_back(x, std::move(comp_failure));
            continue;
        }

        // Every current block is certified to have a clique path ending in x:
        // initial components were checked above and merged unions are checked
        // before merging.  A candidate whose non-minimal traces span at most
        // one block therefore needs no fresh check; unions spanning several
        // blocks are memoized per clique.
        std::map<VertexSet, bool> interval_memo;
        VertexSet waiting = x;
        std::vector<int> order;
        while (!waiting.empty()) {
            int chosen = -1;
            VertexSet chosen_union(g.n());
            int chosen_span = 0;
            for (int cand : waiting) {
                VertexSet nm(g.n());
                int span = 0;
                for (const auto& b : blocks)
                    if (!minimal_in(g, cand, b, waiting)) {
                        nm |= b;
                        ++span;
                    }
                bool ok;
                if (span <= 1) {
                    ok = true;
                } else if (auto it = interval_memo.find(nm); it != interval_memo.end()) {
                    ok = it->second;
                } else {
                    ok = interval_memo[nm] = x_interval_ok(g, x, nm);
                }
                if (ok) {
                    chosen = cand;
                    chosen_union = std::move(nm);
                    chosen_span = span;
                    break;
                }
            }
            if (chosen < 0) break;
            if (chosen_span >= 2) {
                std::vector<VertexSet> merged;
                for (const auto& b : blocks)
                    if (!b.is_subset_of(chosen_union)) merged.push_back(b);
                merged.push_back(chosen_union);
                blocks = std::move(merged);
            }
            waiting.reset(chosen);
            order.push_back(chosen);
        }
        if (!waiting.empty()) {
            out.rejection.clique_log.emplace_back(
                x, "no eliminable vertex among " + names_of(g, waiting));
            continue;
        }

        GoodPartition gp{x, Partition(g.all() - x, std::move(blocks)), std::move(order)};
        if (!good_partition_report(g, gp).ok)
            throw std::logic_error("search produced a partition that fails validation");
        out.partition = std::move(gp);
        return out;
    }
    return out;
}

std::optional<GoodPartition> find_good_partition(const Graph& g) {
    return find_good_partition_diagnose(g).partition;
}

StarNesModel synthesize_star_model(const Graph& g, const GoodPartition& gp) {
    auto rep = good_partition_report(g, gp);
    if (!rep.ok)
        throw InputError("partition does not validate: " +
                         (rep.errors.empty() ? std::string("unknown defect")
                                             : rep.errors.front()));

    int t = int(gp.order.size());
    const std::vector<VertexSet>& blocks = gp.blocks.blocks();
    int beta = int(blocks.size());
    int nrays = std::max(beta, 1);
    Rat ray_len = Rat(2 * t + 1);

    StarNesModel model;
    model.rays.assign(nrays, ray_len);
    if (t == 0) return model;  // empty graph

    const std::vector<int>& ord = gp.order;
    std::vector<int> position(g.n(), -1);
    for (int p = 0; p < t; ++p) position[ord[p]] = p;
    const VertexSet& x = gp.central;

    std::vector<std::vector<VertexSet>> trace(t);  // trace[p][j] on block j
    for (int p = 0; p < t; ++p)
        for (int j = 0; j < beta; ++j) trace[p].push_back(g.adj(ord[p]) & blocks[j]);

    // Ray on which each vertex's reach may exceed its common depth.
    std::vector<int> special(t, 0);
    {
        VertexSet remaining = x;
        for (int p = 0; p < t; ++p) {
            int cnt = 0;
            for (int j = 0; j < beta; ++j)
                if (!minimal_in(g, ord[p], blocks[j], remaining)) {
                    special[p] = j;
                    ++cnt;
                }
            if (cnt > 1) throw std::logic_error("validated order fails minimality twice");
            remaining.reset(ord[p]);
        }
    }

    // Reach depths: position's own value everywhere, with the special ray
    // filled back to front so that nested traces get strictly ordered
    // depths.
    std::vector<std::vector<Rat>> depth(t, std::vector<Rat>(nrays));
    for (int p = 0; p < t; ++p)
        for (int j = 0; j < nrays; ++j) depth[p][j] = Rat(p + 1);
    for (int p = t - 1; p >= 0 && beta > 0; --p) {
        int j = special[p];
        if (p == t - 1) {
            depth[p][j] = Rat(t);
            continue;
        }
        const VertexSet& mine = trace[p][j];

        bool below_all = true;  // inclusion-minimal among the later traces
        for (int q = p + 1; q < t && below_all; ++q)
            below_all = mine.is_subset_of(g.adj(ord[q]));
        if (below_all) {
            depth[p][j] = Rat(p + 1);
            continue;
        }
        bool above_all = true;  // every later trace sits inside ours
        for (int q = p + 1; q < t && above_all; ++q)
            above_all = trace[q][j].is_subset_of(mine);
        if (above_all) {
            Rat mx(0);
            for (int q = p + 1; q < t; ++q) mx = std::max(mx, depth[q][j]);
            depth[p][j] = mx + 1;
            continue;
        }
        // Strictly between some later traces: share the depth of an equal
        // trace when one exists, otherwise split the gap.
        bool copied = false;
        for (int q = p + 1; q < t; ++q) {
            if (trace[q][j] != mine) continue;
            if (!copied || depth[q][j] < depth[p][j]) depth[p][j] = depth[q][j];
            copied = true;
        }
        if (!copied) {
            bool has_below = false, has_above = false;
            Rat below, above;
            for (int q = p + 1; q < t; ++q) {
                const VertexSet& theirs = trace[q][j];
                if (theirs.is_subset_of(mine)) {
                    if (!has_below || depth[q][j] > below) below = depth[q][j];
                    has_below = true;
                } else if (mine.is_subset_of(theirs)) {
                    if (!has_above || depth[q][j] < above) above = depth[q][j];
                    has_above = true;
                } else {
                    throw std::logic_error("ray traces are not nested");
                }
            }
            if (!has_below || !has_above || !(below < above))
                throw std::logic_error("no room between nested ray traces");
            depth[p][j] = (below + above) / 2;
        }
    }

    // Invariants the block placement depends on: the p-th eliminated vertex
    // reaches depth at least p+1 on every ray, and strict trace inclusion on
    // a block forces strictly ordered depths on its ray.
    for (int p = 0; p < t; ++p)
        for (int j = 0; j < nrays; ++j)
            if (depth[p][j] < p + 1)
                throw std::logic_error("reach depth fell below the elimination position");
    for (int j = 0; j < beta; ++j)
        for (int p = 0; p < t; ++p)
            for (int q = 0; q < t; ++q) {
                if (p == q) continue;
                const VertexSet& tp = trace[p][j];
                const VertexSet& tq = trace[q][j];
                if (tp.is_subset_of(tq) && tp != tq && !(depth[p][j] < depth[q][j]))
                    throw std::logic_error("nested traces received unordered depths");
            }

    for (int p = 0; p < t; ++p) model.central[g.name(ord[p])] = depth[p];

    // Place each block on its ray: walk the clique path away from the
    // central clique, dropping a separation point between consecutive
    // cliques; a vertex's segment spans the points of its clique range.
    for (int j = 0; j < beta; ++j) {
        auto view = x_interval_view(g, x, blocks[j]);
        if (!view.path) throw std::logic_error("validated block lost its clique path");
        const auto& cliques = view.path->cliques;
        int k = int(cliques.size()) - 1;  // cliques[k] is the central clique

        auto depth_at = [&](int hv) -> const Rat& {
            return depth[position[g.index_of(view.h.name(hv))]][j];
        };

        std::vector<Rat> point(k + 1);
        Rat prev(0);
        for (int i = 1; i <= k; ++i) {
            const VertexSet& ki = cliques[k - i];  // i-th clique leaving the center
            Rat lo = prev, hi = ray_len;
            for (int v : view.xh) {
                const Rat& d = depth_at(v);
                if (ki.test(v)) {
                    if (d < hi) hi = d;
                } else if (d > lo) {
                    lo = d;
                }
            }
            if (!(lo < hi)) throw std::logic_error("clique separation points collide");
            point[i] = (lo + hi) / 2;
            prev = point[i];
        }

        for (int bv : blocks[j]) {
            int hv = view.h.index_of(g.name(bv));
            int first = 0, last = 0;
            for (int i = 1; i <= k; ++i)
                if (cliques[k - i].test(hv)) {
                    if (first == 0) first = i;
                    last = i;
                }
            if (first == 0) throw std::logic_error("block vertex outside every clique");
            model.blocks[g.name(bv)] = RaySegment{j, point[first], point[last]};
        }
    }

    if (!verify_star_model(g, model).ok)
        throw std::logic_error("synthesized star model failed re-verification");
    return model;
}

std::optional<StarRecognition> recognize_star(const Graph& g) {
    auto gp = find_good_partition(g);
    if (!gp) return std::nullopt;
    return StarRecognition{*gp, synthesize_star_model(g, *gp)};
}

}  // namespace leafpower
