#include <doctest.h>

#include "planeweave/exactgeom.hpp"
#include "support.hpp"

using namespace planeweave;
using namespace planeweave::geom;
using testsupport::Rng;

TEST_CASE("orientation on the three canonical triples") {
    CHECK(orientation(point(0, 0), point(1, 0), point(0, 1)) == 1);
    CHECK(orientation(point(0, 0), point(1, 1), point(2, 2)) == 0);
    CHECK(orientation(point(0, 0), point(0, 1), point(1, 0)) == -1);
}

TEST_CASE("orientation is antisymmetric in its last two arguments") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Point p = testsupport::randomPoint(rng), q = testsupport::randomPoint(rng),
              r = testsupport::randomPoint(rng);
        CHECK(orientation(p, q, r) == -orientation(p, r, q));
    }
}

TEST_CASE("segments_cross categories") {
    CHECK(segments_cross(segment(0, 0, 2, 2), segment(0, 2, 2, 0)) == Crossing::Proper);
    CHECK(segments_cross(segment(0, 0, 1, 1), segment(1, 1, 2, 0)) == Crossing::AtEndpoint);
    CHECK(segments_cross(segment(0, 0, 1, 0), segment(0, 1, 1, 1)) == Crossing::None);
}

TEST_CASE("segments_cross detects T-touches and overlaps") {
    // endpoint of one segment in the interior of the other
    CHECK(segments_cross(segment(0, 0, 4, 0), segment(2, 0, 2, 3)) == Crossing::AtEndpoint);
    CHECK_THROWS_AS(segments_cross(segment(0, 0, 4, 0), segment(1, 0, 3, 0)), OverlapError);
    // collinear but touching in a single point is not an overlap
    CHECK(segments_cross(segment(0, 0, 2, 0), segment(2, 0, 5, 0)) == Crossing::AtEndpoint);
    CHECK(segments_cross(segment(0, 0, 2, 0), segment(3, 0, 5, 0)) == Crossing::None);
}

TEST_CASE("segments_cross is symmetric and scale invariant") {
    Rng rng(11);
    int seen = 0;
    while (seen < 300) {
        Segment s{testsupport::randomPoint(rng, 12), testsupport::randomPoint(rng, 12)};
        Segment t{testsupport::randomPoint(rng, 12), testsupport::randomPoint(rng, 12)};
        if (s.a == s.b || t.a == t.b) continue;
        ++seen;
        Crossing st, ts;
        try {
            st = segments_cross(s, t);
            ts = segments_cross(t, s);
        } catch (const OverlapError&) {
            continue;
        }
        CHECK(st == ts);

        Rat scale = rat(rng.range(1, 9), rng.range(1, 4));
        auto scaled = [&scale](const Segment& seg) {
            return Segment{Point{seg.a.x * scale, seg.a.y * scale},
                           Point{seg.b.x * scale, seg.b.y * scale}};
        };
        CHECK(segments_cross(scaled(s), scaled(t)) == st);
    }
}

TEST_CASE("slanted_horizontal_meet closed form") {
    CHECK(slanted_horizontal_meet(point(0, 0), rat(1, 2), point(5, 1)) == point(2, 1));
    CHECK(slanted_horizontal_meet(point(1, 1), rat(1), point(0, 3)) == point(3, 3));
    CHECK(slanted_horizontal_meet(point(0, 0), rat(1, 4), point(9, 2)) == point(8, 2));

    CHECK_THROWS_AS(slanted_horizontal_meet(point(0, 0), rat(-1), point(0, 1)), PreconditionError);
    CHECK_THROWS_AS(slanted_horizontal_meet(point(0, 2), rat(1), point(0, 1)), PreconditionError);
}

TEST_CASE("slanted_horizontal_meet satisfies both line equations exactly") {
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        Point u = testsupport::randomPoint(rng);
        Point v = testsupport::randomPoint(rng);
        Rat m = rat(rng.range(1, 40), rng.range(1, 12));
        if (!(u.y < v.y)) continue;
        Point p = slanted_horizontal_meet(u, m, v);
        CHECK(p.y == v.y);
        CHECK(p.y - u.y == m * (p.x - u.x));
    }
}

TEST_CASE("parallel_gap_vertical") {
    CHECK(parallel_gap_vertical(point(0, 0), point(0, 1), rat(1)) == rat(1));
    CHECK(parallel_gap_vertical(point(0, 0), point(1, 1), rat(1)) == rat(0));
    CHECK(parallel_gap_vertical(point(0, 0), point(2, 5), rat(1, 2)) == rat(4));
}

TEST_CASE("parallel_gap_vertical vanishes exactly on the same slanted line") {
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        Point u = testsupport::randomPoint(rng);
        Rat m = rat(rng.range(1, 30), rng.range(1, 9));
        Rat dx = rng.smallRat(10, 4);
        Point onLine{u.x + dx, u.y + m * dx};
        CHECK(parallel_gap_vertical(u, onLine, m) == 0);
        Point off{onLine.x, onLine.y + rat(1, 1000)};
        CHECK(parallel_gap_vertical(u, off, m) > 0);
    }
}

TEST_CASE("convex_hull examples") {
    std::vector<Point> square{point(0, 0), point(1, 0), point(0, 1), point(1, 1),
                              Point{rat(1, 2), rat(1, 2)}};
    auto hull = convex_hull(square);
    REQUIRE(hull.size() == 4);
    for (std::size_t i = 0; i < hull.size(); ++i)
        CHECK(orientation(hull[i], hull[(i + 1) % 4], hull[(i + 2) % 4]) == 1);

    auto single = convex_hull({point(0, 0)});
    REQUIRE(single.size() == 1);
    CHECK(single[0] == point(0, 0));

    auto withMid = convex_hull({point(0, 0), point(1, 1), point(2, 2), point(1, 0)});
    REQUIRE(withMid.size() == 3);
    // (1,1) sits on the hull edge (0,0)-(2,2) and must be excluded
    for (auto& p : withMid) CHECK(p != point(1, 1));
}

TEST_CASE("convex_hull properties") {
    Rng rng(19);
    for (int iter = 0; iter < 60; ++iter) {
        std::vector<Point> pts;
        int n = 3 + (int)rng.below(12);
        for (int i = 0; i < n; ++i) pts.push_back(testsupport::randomPoint(rng, 15));
        auto hull = convex_hull(pts);
        if (hull.size() >= 3) {
            for (std::size_t i = 0; i < hull.size(); ++i)
                CHECK(orientation(hull[i], hull[(i + 1) % hull.size()],
                                  hull[(i + 2) % hull.size()]) == 1);
            for (auto& p : pts) CHECK(point_in_polygon_closed(p, hull));
        }
        CHECK(convex_hull(hull) == hull);
    }
}
