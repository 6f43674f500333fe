#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "leafpower/graph.hpp"

namespace leafpower {

// Vertices listed so that each one's neighbors among later vertices form a
// clique; such an order exists exactly for chordal graphs.
struct EliminationOrder {
    std::vector<int> order;
};

// Induced cycle of length >= 4 in cyclic order, witnessing non-chordality.
struct ChordlessCycle {
    std::vector<int> cycle;
};

using ChordalResult = std::variant<EliminationOrder, ChordlessCycle>;

// Maximum-cardinality search plus an elimination-order check; on failure a
// chordless cycle is extracted. Exactly one alternative is ever returned.
ChordalResult recognize_chordal(const Graph& g);

bool verify_elimination_order(const Graph& g, const EliminationOrder& peo);
bool verify_chordless_cycle(const Graph& g, const ChordlessCycle& c);

// Maximal cliques of a chordal graph in deterministic order; throws
// InputError when g is not chordal.
std::vector<VertexSet> maximal_cliques(const Graph& g);

// Maximal cliques arranged on a line so that the cliques containing any
// fixed vertex are consecutive. When such an arrangement is built for a
// distinguished end clique, that clique sits last.
struct CliquePath {
    std::vector<VertexSet> cliques;
};

// Checks that p lists exactly the maximal cliques of g, without repeats,
// and that every vertex's cliques occupy consecutive positions.
bool verify_clique_path(const Graph& g, const CliquePath& p);

// A clique path of g when one exists (g must be an interval graph),
// nullopt otherwise. Non-chordal inputs yield nullopt.
std::optional<CliquePath> recognize_interval(const Graph& g);

// Whether g has a clique path whose last clique is x. Implemented by
// attaching a pendant pair beyond x and running interval recognition on the
// extended graph; the arrangement is read back and re-verified. Throws
// InputError when x is not a maximal clique of g.
std::optional<CliquePath> is_x_interval(const Graph& g, const VertexSet& x);

}  // namespace leafpower
