#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "leafpower/graph.hpp"
#include "leafpower/rational.hpp"

namespace leafpower {

struct RatInterval {
    Rat lo, hi;  // lo <= hi; zero length allowed
    Rat midpoint() const { return (lo + hi) / 2; }
    Rat length() const { return hi - lo; }
    bool operator==(const RatInterval& o) const { return lo == o.lo && hi == o.hi; }
};

// Midpoint-distance forms: closed intervals intersect iff their midpoints
// are within half the sum of lengths; containment holds iff within half
// the difference.
bool intervals_intersect(const RatInterval& a, const RatInterval& b);
bool interval_contains(const RatInterval& outer, const RatInterval& inner);

// Two-colored interval family over named vertices. Induced adjacency:
// blue-blue pairs are adjacent when their intervals intersect, blue-red
// pairs when the red interval lies inside the blue one, red-red never.
struct BlueRedModel {
    std::map<std::string, RatInterval> intervals;
    std::set<std::string> red;  // every other vertex is blue
    bool is_red(const std::string& v) const { return red.count(v) > 0; }
};

struct ModelDiscrepancy {
    std::string u, v;
    bool edge_in_graph;
    bool edge_in_model;
};

struct VerifyReport {
    bool ok = false;
    std::vector<std::string> errors;           // structural problems
    std::vector<ModelDiscrepancy> mismatches;  // pairwise disagreements
};

// Structural validity (coverage of V(g), well-formed intervals, red names
// known) plus the full pairwise adjacency comparison against g.
VerifyReport verify_bluered_model(const Graph& g, const BlueRedModel& m);

// True/false adjacency the model induces on a pair of its vertices.
bool bluered_adjacent(const BlueRedModel& m, const std::string& u, const std::string& v);

// The graph a model induces on its own vertex set (vertices in name order).
Graph bluered_induced_graph(const BlueRedModel& m);

// Rescales so every length lands in (0, 1]: divide by the maximum length,
// then lengthen zero-length intervals by eps = min(gap, 1)/4, where gap is
// the smallest positive difference between distinct endpoint values.
// Extension direction is chosen per interval so every pairwise
// intersection/containment relation is preserved (checked); an interval
// pinched against opposite endpoints of two containers admits no direction
// and raises InputError.
BlueRedModel normalize_bluered(const BlueRedModel& m);

}  // namespace leafpower
