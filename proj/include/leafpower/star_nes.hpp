#pragma once

// Star neighbourhood-subtree models and the good-partition machinery used to
// recognize the graphs they induce.
//
// A star model lives on a subdivided star: `rays` gives the length of each ray
// emanating from the hub.  Every vertex owns a subtree of that star:
//   - a central vertex owns the hub plus an initial segment of every ray; its
//     entry in `central` lists, per ray, how deep the subtree reaches.  All
//     reach depths are equal except possibly one deeper ray.
//   - every other vertex owns a segment [s,t] of a single ray, recorded in
//     `blocks`, with 0 < s <= t <= ray length.
// Two vertices are adjacent in the induced graph exactly when their subtrees
// share a point.
//
// Recognition works through good partitions: a maximal clique X together with
// a partition of the remaining vertices such that (P1) no component of G - X
// is split across parts, (P2) each part has a clique path ending in X, and
// (P3) X admits an elimination order in which each vertex's neighbourhood
// trace is inclusion-minimal in all but at most one part.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leafpower/bluered.hpp"
#include "leafpower/chordal.hpp"
#include "leafpower/graph.hpp"
#include "leafpower/nes.hpp"
#include "leafpower/rational.hpp"

namespace leafpower {

// Segment [lo, hi] of a single ray, owned by a non-central vertex.
struct RaySegment {
    int ray = 0;
    Rat lo;
    Rat hi;
};

struct StarNesModel {
    std::vector<Rat> rays;                           // ray lengths, all > 0
    std::map<std::string, std::vector<Rat>> central; // vertex -> reach per ray
    std::map<std::string, RaySegment> blocks;        // vertex -> ray segment
};

// Structural defects of the model itself (ignoring any graph).
std::vector<std::string> star_model_errors(const StarNesModel& m);

// Whether the subtrees of two model vertices intersect.
bool star_adjacent(const StarNesModel& m, const std::string& u, const std::string& v);

// Checks that the model is well formed and induces exactly g.
VerifyReport verify_star_model(const Graph& g, const StarNesModel& m);

// The graph induced by the model (vertices in map order).
Graph star_induced_graph(const StarNesModel& m);

// Embeds the star model into a general neighbourhood-subtree model on an
// explicit star-shaped tree.
NesModel star_to_nes(const StarNesModel& m);

// A good partition: maximal clique `central`, partition `blocks` of the
// remaining vertices, and an elimination order over `central` (vertex
// indices, first eliminated first) witnessing property P3.
struct GoodPartition {
    VertexSet central;
    Partition blocks;
    std::vector<int> order;
};

// Union of the parts of `a` in which x's neighbourhood trace is not
// inclusion-minimal among the traces of the vertices of w.
// Throws InputError when x is not a member of w.
VertexSet notmin(const Graph& g, int x, const VertexSet& w, const Partition& a);

// Whether x's neighbourhood trace is inclusion-minimal among the traces of
// the vertices of y in all parts of b except at most one.  Requires x in y.
bool is_removable(const Graph& g, int x, const VertexSet& y, const Partition& b);

struct GoodPartitionCheck {
    std::optional<GoodPartition> partition; // present iff all checks pass
    std::vector<std::string> errors;
};

// Checks properties P1-P3 for the clique x and partition b, finding the
// elimination order greedily (the smallest-index removable vertex is taken
// first; any greedy choice succeeds when some order exists).
GoodPartitionCheck validate_good_partition(const Graph& g, const VertexSet& x,
                                           const Partition& b);

// Re-checks a complete certificate, including its stored elimination order.
VerifyReport good_partition_report(const Graph& g, const GoodPartition& gp);

// Why the search rejected a graph: either a chordality witness or, for each
// maximal clique tried as the centre, the stage at which it failed.
struct StarRejection {
    std::optional<ChordlessCycle> cycle;
    std::vector<std::pair<VertexSet, std::string>> clique_log; // clique -> reason
};

struct StarSearch {
    std::optional<GoodPartition> partition;
    StarRejection rejection; // meaningful only when partition is absent
};

// Searches every maximal clique for a good partition, recording diagnostics.
StarSearch find_good_partition_diagnose(const Graph& g);

// As above, without diagnostics.
std::optional<GoodPartition> find_good_partition(const Graph& g);

// Builds a star model realizing g from a good partition.  The partition is
// re-validated first (InputError on failure); the synthesized model is
// re-verified against g before being returned.
StarNesModel synthesize_star_model(const Graph& g, const GoodPartition& gp);

struct StarRecognition {
    GoodPartition partition;
    StarNesModel model;
};

// Full pipeline: find a good partition and synthesize a model from it.
std::optional<StarRecognition> recognize_star(const Graph& g);

} // namespace leafpower
