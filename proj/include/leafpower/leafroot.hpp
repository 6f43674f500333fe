#pragma once

#include <map>
#include <string>
#include <vector>

#include "leafpower/bluered.hpp"
#include "leafpower/graph.hpp"
#include "leafpower/rational.hpp"

namespace leafpower {

// Weighted caterpillar leaf root. Spine nodes carry the graph vertices as
// pendant leaves; gaps[i] is the spine distance between the attachment
// points of spine[i] and spine[i+1], legs[i] the pendant edge weight.
// Each gap lies in [0, 1], or equals exactly 2: the latter marks a
// component boundary realized by two unit-weight spine edges through an
// intermediate node (shown explicitly in DOT output). Legs lie in [0, 1].
// The graph induced on the leaves joins two of them when their tree
// distance is at most 1.
struct LinearLeafRoot {
    std::vector<std::string> spine;
    std::vector<Rat> gaps;  // size n-1
    std::vector<Rat> legs;  // size n
};

// Structural problems (sizes, weight ranges); empty when well formed.
std::vector<std::string> linear_root_errors(const LinearLeafRoot& r);

// Tree distance between leaves i and j (spine positions).
Rat linear_root_distance(const LinearLeafRoot& r, int i, int j);

// Structural validity plus: leaves are exactly V(g), and distance <= 1
// matches adjacency on every pair.
VerifyReport verify_linear_leafroot(const Graph& g, const LinearLeafRoot& r);

// The graph a root induces on its leaves.
Graph linear_root_induced_graph(const LinearLeafRoot& r);

// Unrestricted weighted-tree leaf root: an arbitrary tree with edge
// weights in [0, 1] whose leaves are exactly the graph vertices.
struct GeneralLeafRoot {
    std::vector<std::string> node_names;
    struct Edge {
        int u, v;
        Rat w;
    };
    std::vector<Edge> edges;
    // graph vertex name -> tree node name (must be a leaf of the tree)
    std::map<std::string, std::string> leaf_of;
};

VerifyReport verify_general_leafroot(const Graph& g, const GeneralLeafRoot& r);

// Equivalence between two-colored interval models and caterpillar roots.
//
// Model -> root: vertices are laid on the spine in midpoint order per
// connected component (components joined by gap 2); gaps are midpoint
// differences, legs are (1 -/+ length)/2 for blue/red. Requires a model
// that verifies against g with every length in (0, 1] (normalize first);
// the result is re-verified.
LinearLeafRoot bluered_to_linear_leafroot(const Graph& g, const BlueRedModel& m);

// Root -> model: midpoints are prefix sums of the gaps; a leg w <= 1/2
// becomes a blue interval of length 1-2w, a leg w > 1/2 a red interval of
// length 2w-1. Requires a root that verifies against g; re-verified.
BlueRedModel linear_leafroot_to_bluered(const Graph& g, const LinearLeafRoot& r);

}  // namespace leafpower
