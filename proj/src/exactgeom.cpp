#include "planeweave/exactgeom.hpp"

#include <algorithm>

namespace planeweave {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational");
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw ParseError("bad rational: " + text);
    if (sgn(Rat(r.get_den())) <= 0)
        throw ParseError("non-positive denominator: " + text);
    r.canonicalize();
    return r;
}

std::string format_rat(const Rat& value) {
    return value.get_str();
}

std::size_t rat_bits(const Rat& value) {
    std::size_t n = mpz_sizeinbase(value.get_num().get_mpz_t(), 2);
    std::size_t d = mpz_sizeinbase(value.get_den().get_mpz_t(), 2);
    return std::max(n, d);
}

} // namespace planeweave

namespace planeweave::geom {

static Rat cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int orientation(const Point& p, const Point& q, const Point& r) {
    return sgn(cross(p, q, r));
}

bool point_on_segment(const Point& p, const Segment& s) {
    if (orientation(s.a, s.b, p) != 0) return false;
    return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
           std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

Crossing segments_cross(const Segment& s, const Segment& t) {
    int d1 = orientation(t.a, t.b, s.a);
    int d2 = orientation(t.a, t.b, s.b);
    int d3 = orientation(s.a, s.b, t.a);
    int d4 = orientation(s.a, s.b, t.b);

    if (d1 * d2 < 0 && d3 * d4 < 0) return Crossing::Proper;

    if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
        // Collinear. Project onto the dominant axis and compare spans.
        bool useX = s.a.x != s.b.x || t.a.x != t.b.x;
        auto coord = [useX](const Point& p) { return useX ? p.x : p.y; };
        Rat s1 = std::min(coord(s.a), coord(s.b)), s2 = std::max(coord(s.a), coord(s.b));
        Rat t1 = std::min(coord(t.a), coord(t.b)), t2 = std::max(coord(t.a), coord(t.b));
        Rat lo = std::max(s1, t1), hi = std::min(s2, t2);
        if (lo > hi) return Crossing::None;
        if (lo < hi) throw OverlapError("segments share a collinear sub-segment");
        return Crossing::AtEndpoint; // touch at one shared extreme point
    }

    // One endpoint on the other segment (covers shared endpoints and
    // T-touches); any such contact is a single point at an endpoint.
    if ((d1 == 0 && point_on_segment(s.a, t)) || (d2 == 0 && point_on_segment(s.b, t)) ||
        (d3 == 0 && point_on_segment(t.a, s)) || (d4 == 0 && point_on_segment(t.b, s)))
        return Crossing::AtEndpoint;

    return Crossing::None;
}

Point crossing_point(const Segment& s, const Segment& t) {
    Rat d1x = s.b.x - s.a.x, d1y = s.b.y - s.a.y;
    Rat d2x = t.b.x - t.a.x, d2y = t.b.y - t.a.y;
    Rat denom = d1x * d2y - d1y * d2x;
    if (denom == 0) throw PreconditionError("crossing_point on parallel segments");
    Rat u = ((t.a.x - s.a.x) * d2y - (t.a.y - s.a.y) * d2x) / denom;
    return Point{s.a.x + u * d1x, s.a.y + u * d1y};
}

Point slanted_horizontal_meet(const Point& u, const Rat& m, const Point& v) {
    if (m <= 0) throw PreconditionError("slanted_horizontal_meet: slope must be positive");
    if (u.y >= v.y) throw PreconditionError("slanted_horizontal_meet: requires y(u) < y(v)");
    return Point{u.x + (v.y - u.y) / m, v.y};
}

Rat parallel_gap_vertical(const Point& u, const Point& v, const Rat& m) {
    if (m <= 0) throw PreconditionError("parallel_gap_vertical: slope must be positive");
    Rat gap = v.y - u.y - m * (v.x - u.x);
    return abs(gap);
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 1) return pts;

    std::vector<Point> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) { // lower
        while (k >= 2 && orientation(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) { // upper
        while (k >= lower && orientation(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() == 2 && hull[0] == hull[1]) hull.pop_back();
    return hull;
}

bool point_in_polygon_closed(const Point& p, const std::vector<Point>& polygon) {
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i)
        if (point_on_segment(p, Segment{polygon[i], polygon[(i + 1) % n]})) return true;
    return point_in_polygon(p, polygon);
}

bool point_in_polygon(const Point& p, const std::vector<Point>& polygon) {
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i)
        if (point_on_segment(p, Segment{polygon[i], polygon[(i + 1) % n]})) return false;

    // Even-odd rule with a rightward ray; vertices on the ray are handled by
    // counting an edge only when it straddles the ray's line with its lower
    // endpoint strictly below.
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        Point a = polygon[i], b = polygon[(i + 1) % n];
        if (a.y > b.y) std::swap(a, b);
        if (a.y <= p.y && p.y < b.y) {
            // side > 0 iff the edge crosses the ray strictly right of p
            Rat side = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
            if (side > 0) inside = !inside;
        }
    }
    return inside;
}

Rat squared_distance(const Point& a, const Point& b) {
    Rat dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

} // namespace planeweave::geom
