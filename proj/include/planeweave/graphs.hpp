#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "planeweave/errors.hpp"

namespace planeweave::graphs {

using Edge = std::pair<int, int>; // canonical: first < second

inline Edge edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// A 2-degenerate graph with a fixed degeneracy order. Every vertex has at
// most two predecessors, all earlier in `order`; each edge is accounted for
// in exactly one predecessor list.
struct DegenerateGraph {
    int vertexCount = 0;
    std::vector<Edge> edges;             // sorted, unique, canonical
    std::vector<int> order;              // construction order (degeneracy order)
    std::vector<std::vector<int>> preds; // per vertex id, 0..2 predecessors
    std::vector<int> layer;              // lambda-layer tags; -1 when untagged

    // Checks the structural invariants; throws Error on violation.
    void validate() const;
};

// Peels vertices of degree <= 2 (smallest id first) and returns the reversed
// order with derived predecessor lists. Throws NotTwoDegenerate when peeling
// stalls.
DegenerateGraph degeneracy_order(int vertexCount, std::vector<Edge> edges);

struct HeightMap {
    std::vector<int> height;              // per vertex
    std::vector<std::vector<int>> levels; // levels[h] = vertices of height h
};

// height(v) = 0 for sources, else 1 + max over predecessors.
HeightMap heights(const DegenerateGraph& g);

struct NormalizedGraph {
    DegenerateGraph graph;
    std::optional<int> dummyId; // unset when no vertex needed a second predecessor
};

// Gives every vertex 0 or exactly 2 predecessors by adding one dummy source
// (id = old vertexCount, first in order) as second predecessor where needed.
// When no vertex has exactly one predecessor the graph is returned unchanged.
NormalizedGraph normalize_predecessors(const DegenerateGraph& g);

// Removes the dummy vertex and its incident edges. dummyId must be the id
// produced by normalize_predecessors (the largest id); unset id is identity.
DegenerateGraph strip_dummy(const DegenerateGraph& g, std::optional<int> dummyId);

// Layer sizes of the lower-bound family G(n).
struct LowerBoundSizes {
    std::int64_t lambda0, lambda1, lambda2, lambda3;
    std::int64_t vertexCount() const { return lambda0 + lambda1 + lambda2 + lambda3; }
    std::int64_t edgeCount() const { return 2 * (lambda1 + lambda2 + lambda3); }
};

LowerBoundSizes lower_bound_sizes(int n, int multiplicity);

// The lower-bound family G(n): one vertex per pair of Lambda_0, then
// `multiplicity` vertices per pair of Lambda_1, then one per pair of Lambda_2.
// Layer tags are kept in `layer`. Throws SizeOverflow above `vertexCap`.
DegenerateGraph generate_lower_bound_graph(int n, int multiplicity = 89,
                                           std::int64_t vertexCap = 10'000'000);

struct RandomGraphOptions {
    // Chance (percent) that a vertex gets fewer than two predecessors, to
    // exercise normalization.
    int zeroPredPercent = 5;
    int onePredPercent = 10;
};

// Deterministic in (n, seed): each vertex after the first picks predecessors
// uniformly among the earlier vertices.
DegenerateGraph random_2degenerate(int n, std::uint64_t seed,
                                   const RandomGraphOptions& options = {});

} // namespace planeweave::graphs
