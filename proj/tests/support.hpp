#pragma once

// Shared test helpers: deterministic generators and independent brute-force
// oracles. Everything here is test-only and deliberately avoids the library
// code paths it is used to check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "planeweave/arrangements.hpp"
#include "planeweave/exactgeom.hpp"
#include "planeweave/layout.hpp"

namespace testsupport {

using namespace planeweave;

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed * 0x9E3779B97F4A7C15ULL + 1) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    long range(long lo, long hi) { return lo + (long)below((std::uint64_t)(hi - lo + 1)); }
    Rat smallRat(long span = 50, long maxDen = 10) {
        return rat(range(-span, span), range(1, maxDen));
    }
};

inline Point randomPoint(Rng& rng, long span = 50) {
    return Point{rng.smallRat(span), rng.smallRat(span)};
}

// ---------------------------------------------------------------------------
// Perturbation validators: independent re-derivations of (i)-(iv).

inline bool validates_slope_i(const layout::ColoredDrawing& d, const Rat& m) {
    std::vector<Point> pts;
    for (auto& [v, p] : d.pos) pts.push_back(p);
    std::optional<Rat> xMax;
    for (auto& p : pts)
        if (!xMax || p.x > *xMax) xMax = p.x;
    for (auto& u : pts)
        for (auto& v : pts) {
            if (!(u.y < v.y)) continue;
            Point meet{u.x + (v.y - u.y) / m, v.y};
            if (!(meet.x > *xMax)) return false;
        }
    return true;
}

// quadratic = exhaustive pairwise comparison (small drawings); otherwise the
// sorted-adjacent equivalent, still computed from scratch.
inline bool validates_epsilon_ii_iv(const layout::ColoredDrawing& d, const Rat& m, const Rat& eps,
                                    bool quadratic) {
    std::vector<Point> pts;
    for (auto& [v, p] : d.pos) pts.push_back(p);
    if (eps <= 0) return false;

    auto checkFamily = [&](const std::vector<Rat>& values, const Rat& bound) {
        if (quadratic) {
            for (std::size_t i = 0; i < values.size(); ++i)
                for (std::size_t j = i + 1; j < values.size(); ++j) {
                    Rat gap = abs(values[i] - values[j]);
                    if (gap != 0 && !(bound < gap)) return false;
                }
            return true;
        }
        std::vector<Rat> sorted = values;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i) {
            Rat gap = sorted[i] - sorted[i - 1];
            if (gap != 0 && !(bound < gap)) return false;
        }
        return true;
    };

    std::vector<Rat> ys;
    for (auto& p : pts) ys.push_back(p.y);
    if (!checkFamily(ys, eps)) return false; // (ii)

    std::vector<Rat> meets;
    for (auto& u : pts)
        for (auto& v : pts)
            if (u.y < v.y) meets.push_back(u.x + (v.y - u.y) / m);
    if (!checkFamily(meets, eps)) return false; // (iii)

    std::vector<Rat> intercepts; // (iv) via the vertical surrogate halved
    for (auto& p : pts) intercepts.push_back(p.y - m * p.x);
    return checkFamily(intercepts, 2 * eps);
}

// ---------------------------------------------------------------------------
// 2+2 face-structure oracle: the crossing quadrilateral of a valid
// configuration is simple; TypeI iff it is convex iff no segment endpoint
// lies inside it.

enum class OracleTwoTwo { TypeI, TypeII, Invalid };

inline OracleTwoTwo oracle_classify_two_two(const Segment& r1, const Segment& r2,
                                            const Segment& b1, const Segment& b2) {
    auto relation = [](const Segment& a, const Segment& b) -> std::optional<geom::Crossing> {
        try {
            return geom::segments_cross(a, b);
        } catch (const OverlapError&) {
            return std::nullopt;
        }
    };
    auto rr = relation(r1, r2), bb = relation(b1, b2);
    if (rr != geom::Crossing::None || bb != geom::Crossing::None) return OracleTwoTwo::Invalid;
    for (const Segment* r : {&r1, &r2})
        for (const Segment* b : {&b1, &b2})
            if (relation(*r, *b) != geom::Crossing::Proper) return OracleTwoTwo::Invalid;

    Point x11 = geom::crossing_point(r1, b1);
    Point x12 = geom::crossing_point(r1, b2);
    Point x21 = geom::crossing_point(r2, b1);
    Point x22 = geom::crossing_point(r2, b2);
    std::vector<Point> quad{x11, x12, x22, x21};

    int endpointsInside = 0;
    for (const Segment* s : {&r1, &r2, &b1, &b2})
        for (const Point* p : {&s->a, &s->b})
            if (geom::point_in_polygon(*p, quad)) ++endpointsInside;

    // Cross-check with quadrilateral convexity.
    int turnSigns[4];
    for (int i = 0; i < 4; ++i)
        turnSigns[i] = geom::orientation(quad[i], quad[(i + 1) % 4], quad[(i + 2) % 4]);
    bool convex = turnSigns[0] == turnSigns[1] && turnSigns[1] == turnSigns[2] &&
                  turnSigns[2] == turnSigns[3];
    if (convex != (endpointsInside == 0)) return OracleTwoTwo::Invalid; // inconsistent: bug
    if (!convex && endpointsInside != 2) return OracleTwoTwo::Invalid;
    return endpointsInside == 0 ? OracleTwoTwo::TypeI : OracleTwoTwo::TypeII;
}

// A valid type-II configuration: the second red sits on the line y = x with
// the first red's segment containing the red lines' crossing; the blues repay
// it by meeting the reds in opposite orders.
inline std::array<Segment, 4> base_type_two() {
    return {Segment{point(-10, 0), point(10, 0)},
            Segment{point(3, 3), point(8, 8)},
            Segment{Point{rat(-31, 5), rat(-7, 10)}, Point{rat(38, 5), rat(147, 20)}},
            Segment{Point{rat(51, 10), rat(-2, 5)}, Point{rat(39, 10), rat(22, 5)}}};
}

// Random valid 2+2 configurations. Mostly from random simple 4-line
// arrangements (clip each line to a segment covering its two other-color
// crossings and excluding the same-color one; the non-realizable pairing is
// skipped). Every fourth draw is a random affine image of the type-II base,
// since random intercepts almost never realize type II; affine maps preserve
// the class (the crossing-direction product scales by det^4 > 0).
inline std::optional<std::array<Segment, 4>> random_two_two(Rng& rng) {
    if (rng.below(4) == 0) {
        Rat a = rng.smallRat(4, 3), b = rng.smallRat(4, 3);
        Rat c = rng.smallRat(4, 3), d = rng.smallRat(4, 3);
        if (a * d - b * c == 0) return std::nullopt;
        Rat tx = rng.smallRat(30, 3), ty = rng.smallRat(30, 3);
        auto map = [&](const Point& p) {
            return Point{a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
        };
        std::array<Segment, 4> out = base_type_two();
        for (auto& s : out) s = Segment{map(s.a), map(s.b)};
        return out;
    }
    Rat slope[4], icept[4];
    for (int i = 0; i < 4; ++i) {
        slope[i] = rng.smallRat(8, 5);
        icept[i] = rng.smallRat(40, 5);
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (slope[i] == slope[j]) return std::nullopt;

    Rat crossX[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) crossX[i][j] = (icept[j] - icept[i]) / (slope[i] - slope[j]);

    static const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    const int* pick = pairings[rng.below(3)];
    int mateOf[4];
    mateOf[pick[0]] = pick[1];
    mateOf[pick[1]] = pick[0];
    mateOf[pick[2]] = pick[3];
    mateOf[pick[3]] = pick[2];

    std::array<Segment, 4> segs;
    for (int i = 0; i < 4; ++i) {
        std::vector<Rat> good;
        for (int j = 0; j < 4; ++j)
            if (j != i && j != mateOf[i]) good.push_back(crossX[i][j]);
        Rat lo = std::min(good[0], good[1]), hi = std::max(good[0], good[1]);
        Rat bad = crossX[i][mateOf[i]];
        if (lo < bad && bad < hi) return std::nullopt; // type III pairing
        if (bad == lo || bad == hi) return std::nullopt;
        Rat left = bad < lo ? Rat(lo - (lo - bad) / 2) : Rat(lo - 1);
        Rat right = bad > hi ? Rat(hi + (bad - hi) / 2) : Rat(hi + 1);
        segs[i] = Segment{Point{left, slope[i] * left + icept[i]},
                          Point{right, slope[i] * right + icept[i]}};
    }
    // order: r1 r2 b1 b2
    return std::array<Segment, 4>{segs[pick[0]], segs[pick[1]], segs[pick[2]], segs[pick[3]]};
}

// ---------------------------------------------------------------------------
// Random all-crossing families: nBlues near-vertical disjoint segments, reds
// drawn through rank-paired anchor heights so they stay pairwise disjoint.

inline arr::ColoredSegmentFamily random_all_crossing_family(Rng& rng, int nReds, int nBlues) {
    for (int attempt = 0;; ++attempt) {
        std::vector<Rat> tilt(nBlues), xBase(nBlues);
        std::vector<Segment> blues;
        for (int j = 0; j < nBlues; ++j) {
            tilt[j] = rat(rng.range(-10, 10), 600);
            xBase[j] = rat(10 * j);
            blues.push_back(Segment{Point{xBase[j] + tilt[j] * -100, rat(-100)},
                                    Point{xBase[j] + tilt[j] * 100, rat(100)}});
        }

        // Distinct integer anchor heights, rank-paired so the chords keep the
        // same vertical order on both carrier blues and stay disjoint.
        auto sortedHeights = [&rng, nReds]() {
            std::vector<long> hs;
            while ((int)hs.size() < nReds) {
                long h = rng.range(-88, 88);
                if (std::find(hs.begin(), hs.end(), h) == hs.end()) hs.push_back(h);
            }
            std::sort(hs.begin(), hs.end());
            return hs;
        };
        std::vector<long> leftY = sortedHeights(), rightY = sortedHeights();

        std::vector<Segment> reds;
        for (int i = 0; i < nReds; ++i) {
            Point a{xBase[0] + tilt[0] * leftY[i], rat(leftY[i])};
            Point b{xBase[nBlues - 1] + tilt[nBlues - 1] * rightY[i], rat(rightY[i])};
            Point dir{b.x - a.x, b.y - a.y};
            Rat ext = rat(1, 100) / dir.x; // a sliver of overshoot past each carrier
            reds.push_back(Segment{Point{a.x - dir.x * ext, a.y - dir.y * ext},
                                   Point{b.x + dir.x * ext, b.y + dir.y * ext}});
        }
        try {
            auto family = arr::make_family(std::move(reds), std::move(blues));
            for (auto& r : family.red)
                for (auto& b : family.blue)
                    if (geom::segments_cross(r, b) != geom::Crossing::Proper)
                        throw Error("generator: pair fails to cross");
            return family;
        } catch (const Error&) {
            if (attempt > 200) throw;
        }
    }
}

// Axis-parallel canonical G_k.
inline arr::ColoredSegmentFamily canonical_grid_family(int k) {
    std::vector<Segment> reds, blues;
    for (int i = 0; i < k; ++i) {
        reds.push_back(Segment{point(-5, 10 * (i + 1)), point(10 * k + 5, 10 * (i + 1))});
        blues.push_back(Segment{point(10 * (i + 1), -5), point(10 * (i + 1), 10 * k + 5)});
    }
    return arr::make_family(std::move(reds), std::move(blues));
}

// ---------------------------------------------------------------------------
// Exponential oracles.

inline bool subset_in_convex_position(const std::vector<Point>& pts, std::uint32_t mask) {
    std::vector<Point> chosen;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (mask & (1u << i)) chosen.push_back(pts[i]);
    if (chosen.size() <= 2) return true;
    return geom::convex_hull(chosen).size() == chosen.size();
}

inline int brute_force_max_convex(const std::vector<Point>& pts) {
    int best = std::min<int>(2, (int)pts.size());
    for (std::uint32_t mask = 1; mask < (1u << pts.size()); ++mask) {
        int size = __builtin_popcount(mask);
        if (size > best && subset_in_convex_position(pts, mask))
            best = size;
    }
    return best;
}

inline int brute_force_max_pairwise_crossing(const std::map<int, Point>& positions,
                                             const std::vector<graphs::Edge>& edges) {
    const int n = (int)edges.size();
    std::vector<std::vector<bool>> cross(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool indep = edges[i].first != edges[j].first && edges[i].first != edges[j].second &&
                         edges[i].second != edges[j].first && edges[i].second != edges[j].second;
            if (!indep) continue;
            Segment si{positions.at(edges[i].first), positions.at(edges[i].second)};
            Segment sj{positions.at(edges[j].first), positions.at(edges[j].second)};
            try {
                cross[i][j] = cross[j][i] = geom::segments_cross(si, sj) == geom::Crossing::Proper;
            } catch (const OverlapError&) {
            }
        }
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if ((mask & (1u << i)) && (mask & (1u << j)) && !cross[i][j]) ok = false;
        if (ok) best = size;
    }
    return best;
}

// Deterministic general-position point sets (rejection on collinear triples).
inline std::vector<Point> random_general_position(Rng& rng, int n, long span = 40) {
    std::vector<Point> pts;
    while ((int)pts.size() < n) {
        Point p = randomPoint(rng, span);
        bool ok = true;
        for (std::size_t i = 0; i < pts.size() && ok; ++i) {
            if (pts[i] == p) ok = false;
            for (std::size_t j = i + 1; j < pts.size() && ok; ++j)
                if (geom::orientation(pts[i], pts[j], p) == 0) ok = false;
        }
        if (ok) pts.push_back(p);
    }
    return pts;
}

} // namespace testsupport
