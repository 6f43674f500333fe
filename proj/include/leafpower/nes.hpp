#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leafpower/bluered.hpp"
#include "leafpower/graph.hpp"
#include "leafpower/rational.hpp"

namespace leafpower {

// Tree with named nodes and positive rational edge lengths; hosts the
// subtree models. A single-node tree with no edges is valid.
struct EmbeddedTree {
    std::vector<std::string> node_names;
    struct Edge {
        int u, v;
        Rat len;  // > 0
    };
    std::vector<Edge> edges;
    int node_count() const { return int(node_names.size()); }
};

// Structural problems; empty when t is a well-formed tree.
std::vector<std::string> tree_errors(const EmbeddedTree& t);

// Point of the tree: a node, or an interior point of an edge at `offset`
// from that edge's u endpoint (0 < offset < length after
// canonicalization). Equality on canonical points is structural.
struct TreePoint {
    int node = -1;
    int edge = -1;
    Rat offset = Rat(0);
    bool is_node() const { return node >= 0; }
    bool operator==(const TreePoint& o) const {
        return node == o.node && edge == o.edge && offset == o.offset;
    }
};

TreePoint node_point(int v);
TreePoint edge_point(int e, const Rat& offset);

// Collapses endpoint offsets to node form; throws InputError on points
// outside the tree.
TreePoint canonical_point(const EmbeddedTree& t, const TreePoint& p);

Rat point_distance(const EmbeddedTree& t, const TreePoint& a, const TreePoint& b);

// The point at distance d from a on the unique a-b path; 0 <= d <= dist.
TreePoint point_on_path(const EmbeddedTree& t, const TreePoint& a, const TreePoint& b,
                        const Rat& d);

// Ball of the tree metric: all points within radius of center. Balls are
// exactly the subtrees used by the models.
struct Ball {
    TreePoint center;
    Rat radius = Rat(0);  // >= 0
};

// Neighborhood-subtree model: adjacency is pairwise ball intersection.
struct NesModel {
    EmbeddedTree tree;
    std::map<std::string, Ball> subtrees;
};

std::vector<std::string> nes_model_errors(const NesModel& m);

bool balls_intersect(const EmbeddedTree& t, const Ball& a, const Ball& b);

// The intersection of two balls is itself a ball (possibly a point);
// nullopt when disjoint.
std::optional<Ball> balls_intersection(const EmbeddedTree& t, const Ball& a, const Ball& b);

// Structural validity plus pairwise agreement of ball intersection with
// adjacency in g.
VerifyReport verify_nes_model(const Graph& g, const NesModel& m);

// The graph a model induces on its own vertex set (name order).
Graph nes_induced_graph(const NesModel& m);

// Re-centers u's subtree at the far end of a fresh line so that no other
// subtree contains the new center; a semantic no-op (re-verified).
NesModel isolate(const NesModel& m, const std::string& u);

// Closure operations: extend a model m of g-minus-u to a model of g. Each
// checks its structural precondition on u's neighborhood in g, checks that
// m verifies against g minus u, and re-verifies the result.
//
// The one vertex of g missing from m is adjacent to every other vertex:
// give it a ball wide enough to reach everything.
NesModel add_universal(const NesModel& m, const Graph& g);
// u of degree 1 with neighbor x: isolate x, put u's point ball at x's
// new center.
NesModel add_pendant(const NesModel& m, const Graph& g, const std::string& u,
                     const std::string& x);
// N(u) a maximal clique of g-u: point ball at the center of the common
// intersection of the neighborhood's subtrees.
NesModel add_simplicial_max_clique(const NesModel& m, const Graph& g, const std::string& u);
// N(u) a clique and minimal separator of g-u: point ball on a fresh line
// at distance equal to the common intersection's radius from its center.
NesModel add_min_separator(const NesModel& m, const Graph& g, const std::string& u);

// Cut-vertex assembly: parts are models of each component of g-u together
// with u. Each part is isolated at u, rescaled so u's subtree has radius 1,
// and the trees are glued at u's centers. Accepts a single part as the
// degenerate case. The result is re-verified against g.
NesModel merge_at_cut_vertex(const std::vector<NesModel>& parts, const std::string& u,
                             const Graph& g);

}  // namespace leafpower
