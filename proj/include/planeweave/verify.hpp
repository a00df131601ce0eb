#pragma once

#include <array>
#include <string>
#include <vector>

#include "planeweave/layout.hpp"

namespace planeweave::verify {

using graphs::DegenerateGraph;
using graphs::Edge;
using layout::ColoredDrawing;
using layout::EdgeColor;

struct ConstraintResult {
    bool pass = true;
    std::string witness; // first offending vertex/edge pair, empty when passing
};

// Outcome of the (C1)..(C6) feasibility check of one drawing.
struct FeasibilityReport {
    std::array<ConstraintResult, 6> constraint; // index 0 = C1
    bool overall = true;

    std::string serialize() const; // "C1 PASS" .. "OVERALL PASS|FAIL"
};

// Checks (C1)-(C6) for a drawing of the height-<=k part of g, exactly:
//   C1 predecessor edges differ in color; height-k vertices use only {h,hs}
//   C2 a separator exists: max x over heights < k  <  min x over height = k
//   C3 no same-color proper crossing
//   C4 all x distinct and all y distinct
//   C5 every vertex h-open to the right
//   C6 every vertex v-open to the bottom
// Throws ShapeMismatch when d does not cover exactly the heights <= k.
FeasibilityReport check_feasible(const ColoredDrawing& d, const DegenerateGraph& g, int k);

// All unordered pairs of same-colored edges whose segments properly cross
// (collinear same-color overlaps count as crossings too).
std::vector<std::pair<Edge, Edge>> monochromatic_crossings(const ColoredDrawing& d);

// True iff the subgraph of edges colored c is acyclic.
bool color_class_is_forest(const ColoredDrawing& d, EdgeColor c);

// Crossing-conflict graph of a fixed drawing: one node per edge, adjacent iff
// the segments properly cross. Shared endpoints never conflict.
struct ConflictGraph {
    std::vector<Edge> nodes;
    std::vector<std::vector<int>> adj;

    int nodeCount() const { return (int)nodes.size(); }
};

ConflictGraph build_conflict_graph(const std::map<int, Point>& positions,
                                   const std::vector<Edge>& edges);

struct DecompositionResult {
    int colorCount = 0;
    std::vector<int> coloring; // per conflict-graph node, 0-based color
    bool exact = true;         // false when the node cap forced the heuristic
};

// Minimum number of plane subgraphs the fixed drawing decomposes into =
// chromatic number of the conflict graph. Exact branch-and-bound up to
// exactLimit nodes, DSATUR upper bound beyond.
DecompositionResult min_plane_decomposition(const ConflictGraph& cg, int exactLimit = 60);

// Like min_plane_decomposition but every color class must also be acyclic in
// the underlying graph (minimum plane-forest decomposition).
DecompositionResult min_plane_forest_decomposition(const ColoredDrawing& d, int exactLimit = 60);

} // namespace planeweave::verify
