#pragma once

#include <optional>
#include <vector>

#include "planeweave/rat.hpp"

namespace planeweave::geom {

// Sign of the cross product (q-p) x (r-p): +1 counterclockwise, 0 collinear,
// -1 clockwise. Exact.
int orientation(const Point& p, const Point& q, const Point& r);

enum class Crossing {
    Proper,     // open interiors meet in exactly one point
    AtEndpoint, // unique common point, and it is an endpoint of s or t
    None,       // disjoint
};

// Classifies how two segments meet. Throws OverlapError when they share a
// collinear sub-segment of positive length.
Crossing segments_cross(const Segment& s, const Segment& t);

// Intersection point of two properly crossing (or endpoint-touching)
// segments. Precondition: segments_cross(s,t) != None.
Point crossing_point(const Segment& s, const Segment& t);

// Intersection of the line through u with slope m (m > 0) and the horizontal
// line through v. Requires y(u) < y(v).
Point slanted_horizontal_meet(const Point& u, const Rat& m, const Point& v);

// Vertical gap |y(v) - y(u) - m*(x(v) - x(u))| between the slope-m lines
// through u and v. Rational surrogate for the Euclidean line distance (scaled
// by sqrt(1+m^2)); order comparisons against it are exact.
Rat parallel_gap_vertical(const Point& u, const Point& v, const Rat& m);

// Counterclockwise convex hull, collinear boundary points excluded.
// Duplicates are ignored; a single point hulls to itself.
std::vector<Point> convex_hull(std::vector<Point> points);

// True iff p lies strictly inside the simple polygon (exact even-odd test).
bool point_in_polygon(const Point& p, const std::vector<Point>& polygon);

// True iff p lies on the closed polygon (inside or on the boundary).
bool point_in_polygon_closed(const Point& p, const std::vector<Point>& polygon);

// True iff p lies on the closed segment s.
bool point_on_segment(const Point& p, const Segment& s);

// Squared Euclidean distance, exact.
Rat squared_distance(const Point& a, const Point& b);

} // namespace planeweave::geom
