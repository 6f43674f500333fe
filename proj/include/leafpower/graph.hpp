#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "leafpower/bitset.hpp"

namespace leafpower {

// Raised for malformed inputs: bad files, unknown vertices, duplicate edges,
// violated operation preconditions.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable finite simple graph. Vertices are indexed 0..n-1 in the order
// they were declared; every index has a distinct string name used by all
// serialized formats.
class Graph {
public:
    Graph() = default;

    // Validates: distinct non-empty names, endpoints in range, no self-loops,
    // no duplicate edges (in either orientation).
    Graph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& edges);

    static Graph from_named_edges(std::vector<std::string> names,
                                  const std::vector<std::pair<std::string, std::string>>& edges);

    int n() const { return int(names_.size()); }
    int m() const { return m_; }

    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int v) const { return names_.at(v); }
    // -1 when no vertex has this name.
    int index_of(const std::string& name) const;

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    const VertexSet& adj(int v) const { return adj_.at(v); }
    VertexSet closed_adj(int v) const { return adj_.at(v).with(v); }
    int degree(int v) const { return adj_.at(v).count(); }
    VertexSet all() const { return VertexSet::full(n()); }

    // Edges as (u, v) with u < v, ordered lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool is_clique(const VertexSet& s) const;
    // True when s is a clique and no outside vertex is adjacent to all of s.
    bool is_maximal_clique(const VertexSet& s) const;

    // Subgraph induced by keep; vertex names carry over, indices are
    // renumbered in increasing order of the old indices.
    Graph induced(const VertexSet& keep) const;

    // Connected components, ordered by smallest member index.
    std::vector<VertexSet> components() const;
    VertexSet component_of(int v) const;
    bool connected() const;

private:
    std::vector<std::string> names_;
    std::vector<VertexSet> adj_;
    int m_ = 0;
};

// Partition of a ground vertex set into nonempty disjoint covering blocks,
// stored canonically (blocks ordered by smallest member).
class Partition {
public:
    Partition(VertexSet ground, std::vector<VertexSet> blocks);

    const VertexSet& ground() const { return ground_; }
    const std::vector<VertexSet>& blocks() const { return blocks_; }
    int size() const { return int(blocks_.size()); }

    // Index of the block containing v, -1 if v is outside the ground set.
    int block_index_of(int v) const;

    // True when every block of this partition is contained in a block of
    // coarser (both over the same ground set).
    bool refines(const Partition& coarser) const;

    bool operator==(const Partition& o) const {
        return ground_ == o.ground_ && blocks_ == o.blocks_;
    }

private:
    VertexSet ground_;
    std::vector<VertexSet> blocks_;
};

// JSON graph format: {"vertices": ["a", ...], "edges": [["a","b"], ...]}.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

// Plain text: one "u v" pair per line, '#' starts a comment. Vertices appear
// in order of first mention; isolated vertices are expressible as a line
// holding a single name.
Graph graph_from_edge_list(const std::string& text);
std::string graph_to_edge_list(const Graph& g);

// Reads JSON when the content starts with '{', edge-list text otherwise.
Graph graph_from_text(const std::string& text);

}  // namespace leafpower
