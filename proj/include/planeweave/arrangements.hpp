#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planeweave/exactgeom.hpp"
#include "planeweave/graphs.hpp"

namespace planeweave::arr {

// Red/blue segment family; segments of one color are pairwise disjoint.
struct ColoredSegmentFamily {
    std::vector<Segment> red;
    std::vector<Segment> blue;
};

// Validates the within-color disjointness invariant; throws Error on violation.
ColoredSegmentFamily make_family(std::vector<Segment> red, std::vector<Segment> blue);

enum class TwoTwoClass { TypeI, TypeII, Invalid };

// Classifies a 2+2 configuration: Invalid unless reds are disjoint, blues are
// disjoint and all four red/blue pairs cross properly. TypeI is the class of
// the 2-grid; TypeII is the other realizable class. Decided exactly by the
// sign product of pairwise direction cross products (a 2+2 arrangement is
// TypeII iff the blues cross one red from the same side and the other from
// opposite sides).
TwoTwoClass classify_two_two(const Segment& r1, const Segment& r2,
                             const Segment& b1, const Segment& b2);

// Witness that selected reds and blues form an arrangement combinatorially
// equivalent to G_k, operationalized as the crossing-order signature: under
// the deterministic orientation normalization, every selected red meets the
// blues in order crossOrderRed and every blue meets the reds in order
// crossOrderBlue.
struct GridCertificate {
    std::vector<int> redIdx;        // indices into family.red, ascending
    std::vector<int> blueIdx;       // indices into family.blue, ascending
    std::vector<int> crossOrderRed; // positions into blueIdx, in crossing order
    std::vector<int> crossOrderBlue;// positions into redIdx, in crossing order
};

bool is_grid_equivalent(const GridCertificate& cert, const ColoredSegmentFamily& f);

struct GridSearchResult {
    std::optional<GridCertificate> certificate;
    // Only meaningful when no certificate was found: true iff every selection
    // was examined, so "none" is certified rather than inconclusive.
    bool exhaustive = false;
};

// Runs the crossing-vector pigeonhole when the family has exactly k blues
// (the pigeonhole setting), falling back to exhaustive search over selections
// for small families. Throws NotAllCrossing when some red/blue pair does not
// cross properly.
GridSearchResult find_k_grid(const ColoredSegmentFamily& f, int k,
                             std::size_t exhaustivePairLimit = 10000);

// 3k red and 3k blue segments in three parallel groups per color, every red
// crossing every blue, rational coordinates.
ColoredSegmentFamily generate_no_grid_family(int k);

// Exact maximum-convex-subset search; returns indices of any k points in
// convex position, or nullopt when the maximum is smaller. Throws
// CollinearInput when three input points are collinear.
std::optional<std::vector<int>> convex_position_subset(const std::vector<Point>& points, int k);

struct BicliqueWitness {
    std::vector<int> aSide;
    std::vector<int> bSide;
    int color = 0;
};

// colors[a][b] in 1..r is the color of edge (a,b) of a complete bipartite
// graph. Finds a monochromatic K_{k,k} or reports none. Throws
// IncompleteColoring on nonpositive entries.
std::optional<BicliqueWitness> monochromatic_biclique(const std::vector<std::vector<int>>& colors,
                                                      int k);

enum class QEdgeType { TypeL, TypeR, TypeI, TypeE };

// Type of a Q-edge with base Q[i] (Q strictly convex, counterclockwise,
// 0-based index): which part of the hull boundary it exits through, or TypeE
// when it misses the interior. General position is demanded: an edge through
// another hull vertex, or a far endpoint inside the hull, is a
// PreconditionError.
QEdgeType classify_Q_edge(const std::vector<Point>& Q, int i, const Segment& e);

// One edge of a drawing of the 1-subdivision of K_{n,n}: from a base vertex
// (in A when fromA, else in B) to its subdivision point.
struct SubdividedEdge {
    bool fromA = true;
    int baseIndex = 0;
    Point mid;
};

// True iff A and B are separated (A u B in strictly convex position, classes
// contiguous along the hull) and no two A-edges or two B-edges properly cross.
bool is_tidy(const std::vector<Point>& A, const std::vector<Point>& B,
             const std::vector<SubdividedEdge>& edges);

// Corridor structure of a grid with one side in A and one side in B.
struct GridContext {
    std::vector<Point> aBase, xA; // A-side bases and far crossing points
    std::vector<Point> bBase, xB;
    bool tidyGrid = false; // every a_i x^A_i / b_i x^B_i inside its 1..k corridor
    bool dotted = false;   // every cell holds a subdivision point

    // Polygon x^A_i, a_i, ..., a_j, x^A_j (0-based, i < j).
    std::vector<Point> corridorA(int i, int j) const;
    std::vector<Point> corridorB(int i, int j) const;
};

// cert must select A-edges as reds and B-edges as blues (one endpoint of each
// selected segment in A resp. B); throws InvalidCertificate otherwise.
GridContext grid_context(const GridCertificate& cert, const ColoredSegmentFamily& f,
                         const std::vector<Point>& A, const std::vector<Point>& B,
                         const std::vector<Point>& subdivisionPoints);

// The t-blowup of the complement of the k x k grid graph: vertex sets V_i^j
// of size t; u in V_i^j and v in V_p^q are adjacent iff i != p and j != q.
struct GammaGraph {
    int k = 0;
    int t = 0;

    int vertexCount() const { return k * k * t; }
    int row(int v) const { return v / t / k + 1; } // 1-based cell indices
    int col(int v) const { return v / t % k + 1; }
    int vertex(int i, int j, int slot) const { return ((i - 1) * k + (j - 1)) * t + slot; }
    bool adjacent(int u, int v) const { return row(u) != row(v) && col(u) != col(v); }
    std::vector<std::pair<int, int>> edges() const;
};

GammaGraph gamma_graph(int k, int t);

struct AdmissibilityResult {
    bool admissible = true;
    std::string violation; // first witness when not admissible
};

// coloring is a symmetric vertexCount x vertexCount matrix with entries in
// 1..r on adjacent pairs (0 elsewhere). Admissible iff every monochromatic
// K_5 has color r and no monotone path u-v-w is monochromatic in a color in
// 3..r-1. Monotone: row(u) < row(v) < row(w) and col strictly increasing or
// strictly decreasing along the path.
AdmissibilityResult is_admissible(const GammaGraph& gamma,
                                  const std::vector<std::vector<int>>& coloring, int r);

// First cell (i,j), scanning lexicographically, in which every vertex has
// r-colored edges into all four (i,j)-quadrants; nullopt when absent.
std::optional<std::pair<int, int>> find_quadrant_hub(const GammaGraph& gamma,
                                                     const std::vector<std::vector<int>>& coloring,
                                                     int r);

// Any k edges of the drawing that pairwise properly cross (hence are
// independent); nullopt when no such set exists. Exact clique search.
std::optional<std::vector<graphs::Edge>> pairwise_crossing_edges(
    const std::map<int, Point>& positions, const std::vector<graphs::Edge>& edges, int k);

} // namespace planeweave::arr
