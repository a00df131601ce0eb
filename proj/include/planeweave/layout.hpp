#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planeweave/exactgeom.hpp"
#include "planeweave/graphs.hpp"

namespace planeweave::layout {

using graphs::DegenerateGraph;
using graphs::Edge;

enum class EdgeColor { h, hs, v, vs };

std::string color_name(EdgeColor c);
std::optional<EdgeColor> color_from_name(const std::string& name);

// A (partial) straight-line drawing with exact rational coordinates and an
// edge coloring. `separator` is the x threshold of constraint (C2); it is
// only meaningful right after a level has been placed.
struct ColoredDrawing {
    std::map<int, Point> pos;
    std::map<Edge, EdgeColor> color;
    int heightOfDrawing = 0;
    Rat separator;
};

// Reflects at the line x = -y (point (x,y) -> (-y,-x)) and swaps the color
// pairs h<->v and hs<->vs. An involution.
ColoredDrawing reflect_and_swap(const ColoredDrawing& d);

// Largest power of two not above min(1, min vertical gap / (width + 1)). For
// every pair u,v with y(u) < y(v) the slanted line through u meets the
// horizontal through v strictly right of every placed vertex (perturbation
// (i)); any smaller slope keeps that property, a dyadic one keeps coordinate
// bit lengths from exploding across levels, and the cap keeps the epsilon
// surrogate for (iv) valid.
Rat choose_slope(const ColoredDrawing& d);

// Largest power of two not above half the minimum over the finitely many
// candidates of perturbations (ii)-(iv): vertical gaps, horizontal gaps of
// slanted/horizontal meets, and half-surrogate gaps between slope-m lines.
// Strictly below every candidate. Returns 1 when no constraints exist
// (single vertex).
Rat choose_epsilon(const ColoredDrawing& d, const Rat& m);

// One new vertex with its two predecessors (unordered; build_schedule sorts
// them by y).
struct NewVertex {
    int vertex;
    int predU;
    int predV;
};

struct PlacementGroup {
    Point p;                   // the intersection point p_i
    int horizontalSource;      // v: predecessor with the larger y
    int slantedSource;         // u: predecessor with the smaller y
    std::vector<int> vertices; // new vertices sharing p_i, ascending id
};

struct PlacementSchedule {
    std::vector<PlacementGroup> groups; // sorted by (y of p, x of p)
    // vertex -> (group index, 1-based rank within the group)
    std::map<int, std::pair<int, int>> assignment;
    // vertex -> 1-based rank across the whole level
    std::map<int, int> globalRank;
};

// Orders the meet points bottom-to-top, left-to-right and assigns every new
// vertex its group and rank. Throws PreconditionError on unplaced
// predecessors.
PlacementSchedule build_schedule(const ColoredDrawing& d, const std::vector<NewVertex>& newLevel,
                                 const Rat& m);

// Places each scheduled vertex with global rank r at p + (eps / (2^r (1+m))) * (m, -1):
// on the slope -1/m line through p, bottom-right of p, Euclidean distance
// strictly below eps/2^r and strictly decreasing in r. New edges are colored
// h (to the horizontal source) and hs (to the slanted source). Sets the
// separator to the largest x among previously placed vertices.
ColoredDrawing place_level(const ColoredDrawing& d, const PlacementSchedule& schedule,
                           const Rat& m, const Rat& eps);

// Called after each level is placed. `normalized` is the graph actually being
// drawn (dummy included); m and eps are zero for level 0.
using LevelHook = std::function<void(const ColoredDrawing& partial, const DegenerateGraph& normalized,
                                     int level, const Rat& m, const Rat& eps)>;

// Runs the full induction: normalize, place level 0 on the diagonal, then per
// level reflect-and-swap, pick m and eps, schedule and place. The returned
// drawing has the dummy vertex stripped.
ColoredDrawing construct_drawing(const DegenerateGraph& g, const LevelHook& hook = {});

struct CoordinateStats {
    std::size_t maxBits = 0;   // largest numerator/denominator bit length
    std::size_t vertices = 0;
};

CoordinateStats coordinate_stats(const ColoredDrawing& d);

} // namespace planeweave::layout
