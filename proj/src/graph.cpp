#include "leafpower/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace leafpower {

Graph::Graph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& edges)
    : names_(std::move(names)) {
    std::unordered_map<std::string, int> seen;
    for (int v = 0; v < n(); ++v) {
        if (names_[v].empty()) throw InputError("empty vertex name");
        if (!seen.emplace(names_[v], v).second)
            throw InputError("duplicate vertex name: " + names_[v]);
    }
    adj_.assign(n(), VertexSet(n()));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n() || v < 0 || v >= n()) throw InputError("edge endpoint out of range");
        if (u == v) throw InputError("self-loop at vertex: " + names_[u]);
        if (adj_[u].test(v))
            throw InputError("duplicate edge: " + names_[u] + " -- " + names_[v]);
        adj_[u].set(v);
        adj_[v].set(u);
        ++m_;
    }
}

Graph Graph::from_named_edges(std::vector<std::string> names,
                              const std::vector<std::pair<std::string, std::string>>& edges) {
    std::unordered_map<std::string, int> index;
    for (int v = 0; v < int(names.size()); ++v) index.emplace(names[v], v);
    std::vector<std::pair<int, int>> idx_edges;
    idx_edges.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end()) throw InputError("edge references unknown vertex: " + a);
        if (ib == index.end()) throw InputError("edge references unknown vertex: " + b);
        idx_edges.emplace_back(ia->second, ib->second);
    }
    return Graph(std::move(names), idx_edges);
}

int Graph::index_of(const std::string& name) const {
    for (int v = 0; v < n(); ++v)
        if (names_[v] == name) return v;
    return -1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
    return out;
}

bool Graph::is_clique(const VertexSet& s) const {
    for (int v : s)
        if (!s.without(v).is_subset_of(adj_[v])) return false;
    return true;
}

bool Graph::is_maximal_clique(const VertexSet& s) const {
    if (s.empty() || !is_clique(s)) return false;
    for (int w : s.complement())
        if (s.is_subset_of(adj_[w])) return false;
    return true;
}

Graph Graph::induced(const VertexSet& keep) const {
    std::vector<std::string> names;
    std::vector<int> old_of_new;
    std::vector<int> new_of_old(n(), -1);
    for (int v : keep) {
        new_of_old[v] = int(names.size());
        names.push_back(names_[v]);
        old_of_new.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : keep)
        for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
            if (keep.test(v)) edges.emplace_back(new_of_old[u], new_of_old[v]);
    return Graph(std::move(names), edges);
}

std::vector<VertexSet> Graph::components() const {
    std::vector<VertexSet> out;
    VertexSet unseen = all();
    while (!unseen.empty()) {
        int root = unseen.first();
        VertexSet comp(n());
        std::vector<int> stack{root};
        comp.set(root);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v])
                if (!comp.test(w)) {
                    comp.set(w);
                    stack.push_back(w);
                }
        }
        out.push_back(comp);
        unseen -= comp;
    }
    return out;
}

VertexSet Graph::component_of(int v) const {
    VertexSet comp(n());
    std::vector<int> stack{v};
    comp.set(v);
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj_[u])
            if (!comp.test(w)) {
                comp.set(w);
                stack.push_back(w);
            }
    }
    return comp;
}

bool Graph::connected() const {
    if (n() == 0) return true;
    return component_of(0).count() == n();
}

Partition::Partition(VertexSet ground, std::vector<VertexSet> blocks)
    : ground_(std::move(ground)), blocks_(std::move(blocks)) {
    VertexSet covered(ground_.universe());
    for (const auto& b : blocks_) {
        if (b.universe() != ground_.universe())
            throw InputError("partition block over a different universe");
        if (b.empty()) throw InputError("empty partition block");
        if (covered.intersects(b)) throw InputError("overlapping partition blocks");
        covered |= b;
    }
    if (covered != ground_) throw InputError("partition blocks do not cover the ground set");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
}

int Partition::block_index_of(int v) const {
    for (int i = 0; i < size(); ++i)
        if (blocks_[i].test(v)) return i;
    return -1;
}

bool Partition::refines(const Partition& coarser) const {
    if (ground_ != coarser.ground_) return false;
    for (const auto& b : blocks_) {
        int host = coarser.block_index_of(b.first());
        if (host < 0 || !b.is_subset_of(coarser.blocks()[host])) return false;
    }
    return true;
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw InputError("graph JSON must be an object with 'vertices' and 'edges'");
    std::vector<std::string> names;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw InputError("vertex names must be strings");
        names.push_back(v.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw InputError("each edge must be a two-element array of vertex names");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return Graph::from_named_edges(std::move(names), edges);
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["vertices"] = g.names();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges())
        edges.push_back(nlohmann::json::array({g.name(u), g.name(v)}));
    j["edges"] = edges;
    return j;
}

Graph graph_from_edge_list(const std::string& text) {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> index;
    auto intern = [&](const std::string& s) {
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        index.emplace(s, int(names.size()));
        names.push_back(s);
        return int(names.size()) - 1;
    };
    std::vector<std::pair<std::string, std::string>> edges;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() == 1) {
            intern(tok[0]);
        } else if (tok.size() == 2) {
            intern(tok[0]);
            intern(tok[1]);
            edges.emplace_back(tok[0], tok[1]);
        } else {
            throw InputError("edge list line " + std::to_string(lineno) +
                             ": expected one or two names");
        }
    }
    return Graph::from_named_edges(std::move(names), edges);
}

std::string graph_to_edge_list(const Graph& g) {
    std::ostringstream out;
    VertexSet mentioned(g.n());
    for (auto [u, v] : g.edges()) {
        out << g.name(u) << " " << g.name(v) << "\n";
        mentioned.set(u);
        mentioned.set(v);
    }
    for (int v : mentioned.complement()) out << g.name(v) << "\n";
    return out.str();
}

Graph graph_from_text(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return graph_from_json(nlohmann::json::parse(text));
        break;
    }
    return graph_from_edge_list(text);
}

}  // namespace leafpower
