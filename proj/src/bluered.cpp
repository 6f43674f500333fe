#include "leafpower/bluered.hpp"

#include <algorithm>

namespace leafpower {

bool intervals_intersect(const RatInterval& a, const RatInterval& b) {
    Rat d = a.midpoint() - b.midpoint();
    return abs(d) * 2 <= a.length() + b.length();
}

bool interval_contains(const RatInterval& outer, const RatInterval& inner) {
    Rat d = outer.midpoint() - inner.midpoint();
    return abs(d) * 2 <= outer.length() - inner.length();
}

bool bluered_adjacent(const BlueRedModel& m, const std::string& u, const std::string& v) {
    const RatInterval& iu = m.intervals.at(u);
    const RatInterval& iv = m.intervals.at(v);
    bool ru = m.is_red(u), rv = m.is_red(v);
    if (ru && rv) return false;
    if (!ru && !rv) return intervals_intersect(iu, iv);
    const RatInterval& blue = ru ? iv : iu;
    const RatInterval& red = ru ? iu : iv;
    return interval_contains(blue, red);
}

VerifyReport verify_bluered_model(const Graph& g, const BlueRedModel& m) {
    VerifyReport rep;
    for (const auto& [name, iv] : m.intervals) {
        if (g.index_of(name) < 0) rep.errors.push_back("interval for unknown vertex: " + name);
        if (iv.lo > iv.hi) rep.errors.push_back("interval with negative length at: " + name);
    }
    for (int v = 0; v < g.n(); ++v)
        if (!m.intervals.count(g.name(v)))
            rep.errors.push_back("vertex without interval: " + g.name(v));
    for (const auto& name : m.red)
        if (!m.intervals.count(name))
            rep.errors.push_back("red color on vertex without interval: " + name);
    if (!rep.errors.empty()) return rep;

    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            bool in_model = bluered_adjacent(m, g.name(u), g.name(v));
            bool in_graph = g.has_edge(u, v);
            if (in_model != in_graph)
                rep.mismatches.push_back({g.name(u), g.name(v), in_graph, in_model});
        }
    rep.ok = rep.mismatches.empty();
    return rep;
}

Graph bluered_induced_graph(const BlueRedModel& m) {
    std::vector<std::string> names;
    for (const auto& [name, iv] : m.intervals) names.push_back(name);
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            if (bluered_adjacent(m, names[i], names[j])) edges.emplace_back(int(i), int(j));
    return Graph(std::move(names), edges);
}

namespace {

// The model-induced adjacency over all vertex pairs; this is precisely what
// normalization must leave untouched.
std::vector<bool> adjacency_bits(const BlueRedModel& m) {
    std::vector<bool> bits;
    for (auto a = m.intervals.begin(); a != m.intervals.end(); ++a)
        for (auto b = std::next(a); b != m.intervals.end(); ++b)
            bits.push_back(bluered_adjacent(m, a->first, b->first));
    return bits;
}

}  // namespace

BlueRedModel normalize_bluered(const BlueRedModel& m) {
    for (const auto& [name, iv] : m.intervals)
        if (iv.lo > iv.hi) throw InputError("interval with negative length at: " + name);

    BlueRedModel out = m;
    Rat maxlen(0);
    for (const auto& [name, iv] : out.intervals) maxlen = std::max(maxlen, iv.length());
    if (maxlen > 0)
        for (auto& [name, iv] : out.intervals) {
            iv.lo /= maxlen;
            iv.hi /= maxlen;
        }

    // Smallest positive gap between distinct endpoint values, capped at 1.
    std::vector<Rat> endpoints;
    for (const auto& [name, iv] : out.intervals) {
        endpoints.push_back(iv.lo);
        endpoints.push_back(iv.hi);
    }
    std::sort(endpoints.begin(), endpoints.end());
    Rat gap(1);
    for (size_t i = 1; i < endpoints.size(); ++i) {
        Rat d = endpoints[i] - endpoints[i - 1];
        if (d > 0) gap = std::min(gap, d);
    }
    Rat eps = gap / 4;

    std::vector<bool> before = adjacency_bits(out);
    for (auto& [name, iv] : out.intervals) {
        if (iv.length() != 0) continue;
        RatInterval saved = iv;
        iv.hi = saved.hi + eps;  // prefer growing right
        if (adjacency_bits(out) == before) continue;
        iv = {saved.lo - eps, saved.hi};
        if (adjacency_bits(out) == before) continue;
        throw InputError("zero-length interval at '" + name +
                         "' is pinched by containing intervals; no extension preserves the model");
    }
    if (adjacency_bits(out) != before)
        throw std::logic_error("normalization altered the model-induced adjacency");
    for (const auto& [name, iv] : out.intervals)
        if (iv.length() <= 0 || iv.length() > 1)
            throw std::logic_error("normalization left a length outside (0, 1]");
    return out;
}

}  // namespace leafpower
