#include "planeweave/arrangements.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace planeweave::arr {

using geom::Crossing;
using geom::crossing_point;
using geom::orientation;
using geom::point_in_polygon;
using geom::point_in_polygon_closed;
using geom::point_on_segment;
using geom::segments_cross;

namespace {

Rat cross_dirs(const Point& u, const Point& w) { return u.x * w.y - u.y * w.x; }

Point direction(const Segment& s) { return Point{s.b.x - s.a.x, s.b.y - s.a.y}; }

bool disjoint_segments(const Segment& a, const Segment& b) {
    try {
        return segments_cross(a, b) == Crossing::None;
    } catch (const OverlapError&) {
        return false;
    }
}

bool proper_crossing(const Segment& a, const Segment& b) {
    try {
        return segments_cross(a, b) == Crossing::Proper;
    } catch (const OverlapError&) {
        return false;
    }
}

} // namespace

ColoredSegmentFamily make_family(std::vector<Segment> red, std::vector<Segment> blue) {
    for (auto* side : {&red, &blue}) {
        for (std::size_t i = 0; i < side->size(); ++i) {
            if ((*side)[i].a == (*side)[i].b) throw Error("family: degenerate segment");
            for (std::size_t j = i + 1; j < side->size(); ++j)
                if (!disjoint_segments((*side)[i], (*side)[j]))
                    throw Error("family: same-color segments " + std::to_string(i) + " and " +
                                std::to_string(j) + " are not disjoint");
        }
    }
    return ColoredSegmentFamily{std::move(red), std::move(blue)};
}

TwoTwoClass classify_two_two(const Segment& r1, const Segment& r2,
                             const Segment& b1, const Segment& b2) {
    if (!disjoint_segments(r1, r2) || !disjoint_segments(b1, b2)) return TwoTwoClass::Invalid;
    for (const Segment* r : {&r1, &r2})
        for (const Segment* b : {&b1, &b2})
            if (!proper_crossing(*r, *b)) return TwoTwoClass::Invalid;

    int product = 1;
    for (const Segment* r : {&r1, &r2})
        for (const Segment* b : {&b1, &b2})
            product *= sgn(cross_dirs(direction(*r), direction(*b)));
    return product > 0 ? TwoTwoClass::TypeI : TwoTwoClass::TypeII;
}

namespace {

struct SelectionAnalysis {
    std::vector<int> orderRed;  // positions into the blue selection
    std::vector<int> orderBlue; // positions into the red selection
};

// Validity + orientation normalization + common crossing orders for a
// selection of reds and blues. nullopt when the selection is not a grid.
std::optional<SelectionAnalysis> analyze_selection(const std::vector<Segment>& reds,
                                                   const std::vector<Segment>& blues) {
    const std::size_t k = reds.size();
    if (blues.size() != k || k == 0) return std::nullopt;

    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (!disjoint_segments(reds[i], reds[j]) || !disjoint_segments(blues[i], blues[j]))
                return std::nullopt;
    for (auto& r : reds)
        for (auto& b : blues)
            if (!proper_crossing(r, b)) return std::nullopt;

    // Normalize: red 0 keeps its stored direction; every blue is flipped to
    // cross red 0 positively; every other red is flipped to agree with blue 0.
    std::vector<Point> dirR(k), dirB(k);
    for (std::size_t i = 0; i < k; ++i) dirR[i] = direction(reds[i]);
    for (std::size_t j = 0; j < k; ++j) {
        dirB[j] = direction(blues[j]);
        if (cross_dirs(dirR[0], dirB[j]) < 0) dirB[j] = Point{-dirB[j].x, -dirB[j].y};
    }
    for (std::size_t i = 1; i < k; ++i) {
        if (cross_dirs(dirR[i], dirB[0]) < 0) dirR[i] = Point{-dirR[i].x, -dirR[i].y};
    }
    // A grid has all crossings uniformly oriented.
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (cross_dirs(dirR[i], dirB[j]) <= 0) return std::nullopt;

    std::vector<std::vector<Point>> meet(k, std::vector<Point>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            meet[i][j] = crossing_point(reds[i], blues[j]);

    auto order_along = [](const Point& dir, const std::vector<Point>& pts) {
        std::vector<int> idx(pts.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            Rat ta = pts[a].x * dir.x + pts[a].y * dir.y;
            Rat tb = pts[b].x * dir.x + pts[b].y * dir.y;
            return ta < tb;
        });
        return idx;
    };

    SelectionAnalysis analysis;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<int> order = order_along(dirR[i], meet[i]);
        if (i == 0) analysis.orderRed = order;
        else if (order != analysis.orderRed) return std::nullopt;
    }
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<Point> column(k);
        for (std::size_t i = 0; i < k; ++i) column[i] = meet[i][j];
        std::vector<int> order = order_along(dirB[j], column);
        if (j == 0) analysis.orderBlue = order;
        else if (order != analysis.orderBlue) return std::nullopt;
    }
    return analysis;
}

std::vector<Segment> pick(const std::vector<Segment>& segs, const std::vector<int>& idx) {
    std::vector<Segment> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(segs.at(i));
    return out;
}

std::optional<GridCertificate> try_certificate(const ColoredSegmentFamily& f,
                                               const std::vector<int>& redIdx,
                                               const std::vector<int>& blueIdx) {
    auto analysis = analyze_selection(pick(f.red, redIdx), pick(f.blue, blueIdx));
    if (!analysis) return std::nullopt;
    GridCertificate cert;
    cert.redIdx = redIdx;
    cert.blueIdx = blueIdx;
    cert.crossOrderRed = analysis->orderRed;
    cert.crossOrderBlue = analysis->orderBlue;
    return cert;
}

bool shares_endpoint(const Segment& a, const Segment& b) {
    return a.a == b.a || a.a == b.b || a.b == b.a || a.b == b.b;
}

// Lexicographic k-subset enumeration; callback returns true to stop.
template <typename F>
bool for_each_subset(int n, int k, F&& callback) {
    if (k > n) return false;
    std::vector<int> subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    for (;;) {
        if (callback(subset)) return true;
        int i = k - 1;
        while (i >= 0 && subset[i] == n - k + i) --i;
        if (i < 0) return false;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
}

} // namespace

bool is_grid_equivalent(const GridCertificate& cert, const ColoredSegmentFamily& f) {
    const std::size_t k = cert.redIdx.size();
    if (k == 0 || cert.blueIdx.size() != k) return false;
    for (int i : cert.redIdx)
        if (i < 0 || i >= (int)f.red.size()) return false;
    for (int j : cert.blueIdx)
        if (j < 0 || j >= (int)f.blue.size()) return false;
    std::set<int> uniqueRed(cert.redIdx.begin(), cert.redIdx.end());
    std::set<int> uniqueBlue(cert.blueIdx.begin(), cert.blueIdx.end());
    if (uniqueRed.size() != k || uniqueBlue.size() != k) return false;

    std::vector<Segment> reds = pick(f.red, cert.redIdx);
    std::vector<Segment> blues = pick(f.blue, cert.blueIdx);
    std::vector<Segment> all = reds;
    all.insert(all.end(), blues.begin(), blues.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (shares_endpoint(all[i], all[j])) return false;

    auto analysis = analyze_selection(reds, blues);
    if (!analysis) return false;
    return analysis->orderRed == cert.crossOrderRed && analysis->orderBlue == cert.crossOrderBlue;
}

GridSearchResult find_k_grid(const ColoredSegmentFamily& f, int k,
                             std::size_t exhaustivePairLimit) {
    if (k < 1) throw Error("find_k_grid: k must be >= 1");
    for (std::size_t i = 0; i < f.red.size(); ++i)
        for (std::size_t j = 0; j < f.blue.size(); ++j)
            if (!proper_crossing(f.red[i], f.blue[j]))
                throw NotAllCrossing("red " + std::to_string(i) + " does not cross blue " +
                                     std::to_string(j));

    if ((int)f.red.size() < k || (int)f.blue.size() < k)
        return GridSearchResult{std::nullopt, true};

    // Constructive path: with exactly k blues, bucket reds by
    // their crossing vector and take k from one bucket.
    if ((int)f.blue.size() == k) {
        std::map<std::vector<int>, std::vector<int>> buckets;
        for (std::size_t i = 0; i < f.red.size(); ++i) {
            Point dr = direction(f.red[i]);
            int base = sgn(cross_dirs(dr, direction(f.blue[0])));
            std::vector<int> vec;
            for (std::size_t j = 1; j < f.blue.size(); ++j)
                vec.push_back(sgn(cross_dirs(dr, direction(f.blue[j]))) * base);
            buckets[vec].push_back((int)i);
        }
        std::vector<int> blueIdx(k);
        std::iota(blueIdx.begin(), blueIdx.end(), 0);
        for (auto& [vec, reds] : buckets) {
            if ((int)reds.size() < k) continue;
            std::vector<int> redIdx(reds.begin(), reds.begin() + k);
            if (auto cert = try_certificate(f, redIdx, blueIdx))
                return GridSearchResult{cert, false};
        }
    }

    if (f.red.size() * f.blue.size() > exhaustivePairLimit)
        return GridSearchResult{std::nullopt, false};
    auto choose = [](std::size_t n, int kk) {
        __int128 c = 1;
        for (int i = 1; i <= kk; ++i) c = c * (__int128)(n - kk + i) / i;
        return c;
    };
    if (choose(f.red.size(), k) * choose(f.blue.size(), k) > 2'000'000)
        return GridSearchResult{std::nullopt, false}; // too many selections to certify "none"

    std::optional<GridCertificate> found;
    for_each_subset((int)f.red.size(), k, [&](const std::vector<int>& redIdx) {
        return for_each_subset((int)f.blue.size(), k, [&](const std::vector<int>& blueIdx) {
            if (auto cert = try_certificate(f, redIdx, blueIdx)) {
                found = cert;
                return true;
            }
            return false;
        });
    });
    return GridSearchResult{found, true};
}

ColoredSegmentFamily generate_no_grid_family(int k) {
    if (k < 1) throw Error("generate_no_grid_family: k must be >= 1");
    // Three near-horizontal red groups stacked along y, three near-vertical
    // blue groups spread along x; k parallel segments per group. Group slopes
    // differ; spans are chosen so same-color groups stay disjoint while every
    // red still crosses every blue.
    const Rat H = rat(100), W = rat(100), L = rat(350), M = rat(350);
    const Rat tilt[3] = {rat(0), rat(1, 100), rat(-1, 100)};

    std::vector<Segment> red, blue;
    for (int g = 0; g < 3; ++g) {
        for (int c = 0; c < k; ++c) {
            Rat yBase = g * H + c;
            red.push_back(Segment{Point{-L, yBase - tilt[g] * L}, Point{L, yBase + tilt[g] * L}});
            Rat xBase = g * W + c;
            blue.push_back(Segment{Point{xBase - tilt[g] * M, -M}, Point{xBase + tilt[g] * M, M}});
        }
    }
    return make_family(std::move(red), std::move(blue));
}

std::optional<std::vector<int>> convex_position_subset(const std::vector<Point>& points, int k) {
    const int n = (int)points.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (orientation(points[a], points[b], points[c]) == 0)
                    throw CollinearInput("points " + std::to_string(a) + "," + std::to_string(b) +
                                         "," + std::to_string(c) + " are collinear");
    if (k <= 0) return std::vector<int>{};
    if (k <= 2) {
        if (n < k) return std::nullopt;
        std::vector<int> out(k);
        std::iota(out.begin(), out.end(), 0);
        return out;
    }

    auto lexLess = [&points](int a, int b) {
        return points[a].y < points[b].y ||
               (points[a].y == points[b].y && points[a].x < points[b].x);
    };

    int bestSize = 0;
    std::vector<int> bestPolygon;

    // Anchor = lexicographically lowest vertex of the polygon; candidates
    // above it in angular order admit a longest-convex-chain DP.
    for (int anchor = 0; anchor < n; ++anchor) {
        std::vector<int> cand;
        for (int p = 0; p < n; ++p)
            if (p != anchor && lexLess(anchor, p)) cand.push_back(p);
        const int m = (int)cand.size();
        if (m + 1 <= bestSize || m < 2) continue;
        std::sort(cand.begin(), cand.end(), [&](int a, int b) {
            return orientation(points[anchor], points[a], points[b]) > 0;
        });

        // dp[i][j], i < j: longest convex chain anchor -> ... -> cand[i] -> cand[j].
        std::vector<std::vector<int>> dp(m, std::vector<int>(m, 0));
        std::vector<std::vector<int>> parent(m, std::vector<int>(m, -1));
        for (int j = 1; j < m; ++j) {
            for (int i = 0; i < j; ++i) {
                dp[i][j] = 3;
                for (int l = 0; l < i; ++l) {
                    if (dp[l][i] == 0) continue;
                    if (orientation(points[cand[l]], points[cand[i]], points[cand[j]]) <= 0)
                        continue;
                    if (dp[l][i] + 1 > dp[i][j]) {
                        dp[i][j] = dp[l][i] + 1;
                        parent[i][j] = l;
                    }
                }
                // Closing the polygon needs a convex turn back to the anchor.
                if (orientation(points[cand[i]], points[cand[j]], points[anchor]) > 0 &&
                    dp[i][j] > bestSize) {
                    bestSize = dp[i][j];
                    bestPolygon.clear();
                    int ci = i, cj = j;
                    bestPolygon.push_back(cand[cj]);
                    while (ci != -1) {
                        bestPolygon.push_back(cand[ci]);
                        int prev = parent[ci][cj];
                        cj = ci;
                        ci = prev;
                    }
                    bestPolygon.push_back(anchor);
                }
            }
        }
    }

    if (bestSize < k) return std::nullopt;
    bestPolygon.resize(k); // any subset of a convex polygon is in convex position
    std::sort(bestPolygon.begin(), bestPolygon.end());
    return bestPolygon;
}

std::optional<BicliqueWitness> monochromatic_biclique(const std::vector<std::vector<int>>& colors,
                                                      int k) {
    const int nA = (int)colors.size();
    if (nA == 0) return std::nullopt;
    const int nB = (int)colors[0].size();
    int r = 0;
    for (auto& row : colors) {
        if ((int)row.size() != nB) throw IncompleteColoring("ragged color matrix");
        for (int c : row) {
            if (c <= 0) throw IncompleteColoring("uncolored pair");
            r = std::max(r, c);
        }
    }
    if (k <= 0) return BicliqueWitness{{}, {}, 1};

    for (int c = 1; c <= r; ++c) {
        std::vector<int> chosen;
        std::vector<int> candidate(nB);
        std::iota(candidate.begin(), candidate.end(), 0);

        // Depth-first choice of rows, narrowing the common c-neighborhood.
        std::function<std::optional<BicliqueWitness>(int, std::vector<int>)> extend =
            [&](int nextRow, std::vector<int> cand) -> std::optional<BicliqueWitness> {
            if ((int)chosen.size() == k) {
                BicliqueWitness w;
                w.aSide = chosen;
                w.bSide.assign(cand.begin(), cand.begin() + k);
                w.color = c;
                return w;
            }
            for (int a = nextRow; a <= nA - (k - (int)chosen.size()); ++a) {
                std::vector<int> narrowed;
                for (int b : cand)
                    if (colors[a][b] == c) narrowed.push_back(b);
                if ((int)narrowed.size() < k) continue;
                chosen.push_back(a);
                if (auto w = extend(a + 1, std::move(narrowed))) return w;
                chosen.pop_back();
            }
            return std::nullopt;
        };
        if (auto w = extend(0, candidate)) return w;
    }
    return std::nullopt;
}

QEdgeType classify_Q_edge(const std::vector<Point>& Q, int i, const Segment& e) {
    const int kQ = (int)Q.size();
    if (kQ < 3) throw PreconditionError("classify_Q_edge: need at least 3 hull points");
    if (i < 0 || i >= kQ) throw PreconditionError("classify_Q_edge: bad base index");
    for (int a = 0; a < kQ; ++a)
        if (orientation(Q[a], Q[(a + 1) % kQ], Q[(a + 2) % kQ]) <= 0)
            throw PreconditionError("classify_Q_edge: Q not strictly convex counterclockwise");

    Segment edge = e;
    if (edge.b == Q[i]) std::swap(edge.a, edge.b);
    if (!(edge.a == Q[i])) throw PreconditionError("classify_Q_edge: edge not anchored at Q[i]");
    if (point_in_polygon_closed(edge.b, Q))
        throw PreconditionError("classify_Q_edge: far endpoint not outside the hull");
    for (int a = 0; a < kQ; ++a)
        if (a != i && point_on_segment(Q[a], edge))
            throw PreconditionError("classify_Q_edge: edge passes through hull vertex");

    for (int j = 0; j < kQ; ++j) {
        Segment side{Q[j], Q[(j + 1) % kQ]};
        bool crosses;
        try {
            crosses = segments_cross(edge, side) == Crossing::Proper;
        } catch (const OverlapError&) {
            throw PreconditionError("classify_Q_edge: edge overlaps a hull side");
        }
        if (!crosses) continue;
        if (j == kQ - 1) return QEdgeType::TypeI; // the closing segment q_1 q_k
        if (j < i - 1) return QEdgeType::TypeL;
        if (j > i) return QEdgeType::TypeR;
    }
    return QEdgeType::TypeE;
}

bool is_tidy(const std::vector<Point>& A, const std::vector<Point>& B,
             const std::vector<SubdividedEdge>& edges) {
    // Separation: A u B in strictly convex position with contiguous classes.
    std::vector<Point> all = A;
    all.insert(all.end(), B.begin(), B.end());
    std::vector<Point> hull = geom::convex_hull(all);
    if (hull.size() != all.size()) return false; // duplicate or non-extreme point

    auto isA = [&A](const Point& p) {
        for (auto& a : A)
            if (a == p) return true;
        return false;
    };
    int transitions = 0;
    for (std::size_t i = 0; i < hull.size(); ++i)
        if (isA(hull[i]) != isA(hull[(i + 1) % hull.size()])) ++transitions;
    if (!A.empty() && !B.empty() && transitions != 2) return false;

    auto baseOf = [&](const SubdividedEdge& e) -> const Point& {
        return e.fromA ? A.at(e.baseIndex) : B.at(e.baseIndex);
    };
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (edges[i].fromA != edges[j].fromA) continue;
            Segment si{baseOf(edges[i]), edges[i].mid};
            Segment sj{baseOf(edges[j]), edges[j].mid};
            try {
                if (segments_cross(si, sj) == Crossing::Proper) return false;
            } catch (const OverlapError&) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// seg must stay within the closed polygon: endpoints inside-or-on, no proper
// boundary crossing, and the midpoint inside-or-on.
bool segment_in_polygon(const Segment& seg, const std::vector<Point>& polygon) {
    if (!point_in_polygon_closed(seg.a, polygon)) return false;
    if (!point_in_polygon_closed(seg.b, polygon)) return false;
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
        Segment side{polygon[i], polygon[(i + 1) % n]};
        try {
            if (segments_cross(seg, side) == Crossing::Proper) return false;
        } catch (const OverlapError&) {
            // riding along the boundary stays inside the closed polygon
        }
    }
    Point mid{(seg.a.x + seg.b.x) / 2, (seg.a.y + seg.b.y) / 2};
    return point_in_polygon_closed(mid, polygon);
}

} // namespace

std::vector<Point> GridContext::corridorA(int i, int j) const {
    std::vector<Point> poly;
    poly.push_back(xA.at(i));
    for (int l = i; l <= j; ++l) poly.push_back(aBase.at(l));
    poly.push_back(xA.at(j));
    return poly;
}

std::vector<Point> GridContext::corridorB(int i, int j) const {
    std::vector<Point> poly;
    poly.push_back(xB.at(i));
    for (int l = i; l <= j; ++l) poly.push_back(bBase.at(l));
    poly.push_back(xB.at(j));
    return poly;
}

GridContext grid_context(const GridCertificate& cert, const ColoredSegmentFamily& f,
                         const std::vector<Point>& A, const std::vector<Point>& B,
                         const std::vector<Point>& subdivisionPoints) {
    if (!is_grid_equivalent(cert, f)) throw InvalidCertificate("not a valid grid certificate");
    const int k = (int)cert.redIdx.size();

    auto locate = [](const Segment& s, const std::vector<Point>& side) -> std::optional<int> {
        std::optional<int> found;
        for (std::size_t i = 0; i < side.size(); ++i) {
            if (s.a == side[i] || s.b == side[i]) {
                if (found) return std::nullopt; // both endpoints on the side
                found = (int)i;
            }
        }
        return found;
    };

    struct SideEdge {
        int sideIndex;
        Segment seg; // oriented from the base vertex
    };
    auto collect = [&](const std::vector<int>& idx, const std::vector<Segment>& segs,
                       const std::vector<Point>& side, const char* label) {
        std::vector<SideEdge> out;
        for (int id : idx) {
            Segment s = segs.at(id);
            auto at = locate(s, side);
            if (!at) throw InvalidCertificate(std::string("selected ") + label +
                                              " edge has no unique base vertex on its side");
            if (!(s.a == side[*at])) std::swap(s.a, s.b);
            out.push_back(SideEdge{*at, s});
        }
        std::sort(out.begin(), out.end(),
                  [](const SideEdge& a, const SideEdge& b) { return a.sideIndex < b.sideIndex; });
        for (std::size_t i = 1; i < out.size(); ++i)
            if (out[i].sideIndex == out[i - 1].sideIndex)
                throw InvalidCertificate("two selected edges share a base vertex");
        return out;
    };

    std::vector<SideEdge> aEdges = collect(cert.redIdx, f.red, A, "A");
    std::vector<SideEdge> bEdges = collect(cert.blueIdx, f.blue, B, "B");

    GridContext ctx;
    auto farthest_crossing = [](const SideEdge& e, const std::vector<SideEdge>& others) {
        Point dir{e.seg.b.x - e.seg.a.x, e.seg.b.y - e.seg.a.y};
        std::optional<Rat> bestT;
        Point best;
        for (auto& o : others) {
            Point c = crossing_point(e.seg, o.seg);
            Rat t = (c.x - e.seg.a.x) * dir.x + (c.y - e.seg.a.y) * dir.y;
            if (!bestT || t > *bestT) {
                bestT = t;
                best = c;
            }
        }
        return best;
    };
    for (auto& e : aEdges) {
        ctx.aBase.push_back(e.seg.a);
        ctx.xA.push_back(farthest_crossing(e, bEdges));
    }
    for (auto& e : bEdges) {
        ctx.bBase.push_back(e.seg.a);
        ctx.xB.push_back(farthest_crossing(e, aEdges));
    }

    ctx.tidyGrid = true;
    std::vector<Point> wholeA = ctx.corridorA(0, k - 1);
    std::vector<Point> wholeB = ctx.corridorB(0, k - 1);
    for (int i = 0; i < k && ctx.tidyGrid; ++i)
        if (!segment_in_polygon(Segment{ctx.aBase[i], ctx.xA[i]}, wholeA)) ctx.tidyGrid = false;
    for (int i = 0; i < k && ctx.tidyGrid; ++i)
        if (!segment_in_polygon(Segment{ctx.bBase[i], ctx.xB[i]}, wholeB)) ctx.tidyGrid = false;

    ctx.dotted = true;
    for (int i = 0; i + 1 < k && ctx.dotted; ++i) {
        std::vector<Point> corA = ctx.corridorA(i, i + 1);
        for (int j = 0; j + 1 < k && ctx.dotted; ++j) {
            std::vector<Point> corB = ctx.corridorB(j, j + 1);
            bool cellHasPoint = false;
            for (auto& p : subdivisionPoints) {
                if (point_in_polygon(p, corA) && point_in_polygon(p, corB)) {
                    cellHasPoint = true;
                    break;
                }
            }
            if (!cellHasPoint) ctx.dotted = false;
        }
    }
    return ctx;
}

std::vector<std::pair<int, int>> GammaGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertexCount(); ++u)
        for (int v = u + 1; v < vertexCount(); ++v)
            if (adjacent(u, v)) out.push_back({u, v});
    return out;
}

GammaGraph gamma_graph(int k, int t) {
    if (k < 1 || t < 1) throw Error("gamma_graph: k and t must be >= 1");
    return GammaGraph{k, t};
}

namespace {

void validate_coloring(const GammaGraph& gamma, const std::vector<std::vector<int>>& coloring,
                       int r) {
    const int n = gamma.vertexCount();
    if ((int)coloring.size() != n) throw IncompleteColoring("coloring matrix has wrong size");
    for (int u = 0; u < n; ++u) {
        if ((int)coloring[u].size() != n) throw IncompleteColoring("coloring matrix has wrong size");
        for (int v = 0; v < n; ++v) {
            if (!gamma.adjacent(u, v)) continue;
            int c = coloring[u][v];
            if (c <= 0) throw IncompleteColoring("edge (" + std::to_string(u) + "," +
                                                 std::to_string(v) + ") uncolored");
            if (c > r) throw IncompleteColoring("edge color out of range");
            if (coloring[v][u] != c) throw IncompleteColoring("coloring not symmetric");
        }
    }
}

// Any 5-clique in the graph of color-c edges; cliques of Gamma pick at most
// one vertex per cell with pairwise distinct rows and columns.
std::optional<std::vector<int>> find_mono_k5(const GammaGraph& gamma,
                                             const std::vector<std::vector<int>>& coloring, int c) {
    const int n = gamma.vertexCount();
    std::vector<int> clique;
    std::function<std::optional<std::vector<int>>(int)> grow =
        [&](int start) -> std::optional<std::vector<int>> {
        if (clique.size() == 5) return clique;
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int u : clique)
                if (!gamma.adjacent(u, v) || coloring[u][v] != c) { ok = false; break; }
            if (!ok) continue;
            clique.push_back(v);
            if (auto got = grow(v + 1)) return got;
            clique.pop_back();
        }
        return std::nullopt;
    };
    return grow(0);
}

} // namespace

AdmissibilityResult is_admissible(const GammaGraph& gamma,
                                  const std::vector<std::vector<int>>& coloring, int r) {
    if (r < 3) throw Error("is_admissible: r must be >= 3");
    validate_coloring(gamma, coloring, r);

    for (int c = 1; c < r; ++c) {
        if (auto clique = find_mono_k5(gamma, coloring, c)) {
            std::string witness = "monochromatic K5 of color " + std::to_string(c) + ":";
            for (int v : *clique) witness += " " + std::to_string(v);
            return AdmissibilityResult{false, witness};
        }
    }

    const int n = gamma.vertexCount();
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u) {
            if (!gamma.adjacent(u, v)) continue;
            for (int w = u + 1; w < n; ++w) {
                if (!gamma.adjacent(v, w)) continue;
                int c = coloring[u][v];
                if (c < 3 || c >= r || coloring[v][w] != c) continue;
                int iu = gamma.row(u), iv = gamma.row(v), iw = gamma.row(w);
                int ju = gamma.col(u), jv = gamma.col(v), jw = gamma.col(w);
                // monotone: rows strictly between, columns strictly monotone
                bool monotone = ((iu < iv && iv < iw) || (iw < iv && iv < iu)) &&
                                ((ju < jv && jv < jw) || (jw < jv && jv < ju));
                if (monotone)
                    return AdmissibilityResult{false, "monotone path " + std::to_string(u) + "-" +
                                                          std::to_string(v) + "-" +
                                                          std::to_string(w) + " in color " +
                                                          std::to_string(c)};
            }
        }
    }
    return AdmissibilityResult{true, ""};
}

std::optional<std::pair<int, int>> find_quadrant_hub(const GammaGraph& gamma,
                                                     const std::vector<std::vector<int>>& coloring,
                                                     int r) {
    validate_coloring(gamma, coloring, r);
    const int n = gamma.vertexCount();
    for (int i = 1; i <= gamma.k; ++i) {
        for (int j = 1; j <= gamma.k; ++j) {
            bool cellOk = true;
            for (int slot = 0; slot < gamma.t && cellOk; ++slot) {
                int x = gamma.vertex(i, j, slot);
                bool quadrant[4] = {false, false, false, false};
                for (int y = 0; y < n; ++y) {
                    if (!gamma.adjacent(x, y) || coloring[x][y] != r) continue;
                    int p = gamma.row(y), q = gamma.col(y);
                    if (p == i || q == j) continue;
                    quadrant[(p > i ? 2 : 0) + (q > j ? 1 : 0)] = true;
                }
                cellOk = quadrant[0] && quadrant[1] && quadrant[2] && quadrant[3];
            }
            if (cellOk) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

std::optional<std::vector<graphs::Edge>> pairwise_crossing_edges(
    const std::map<int, Point>& positions, const std::vector<graphs::Edge>& edges, int k) {
    if (k <= 0) return std::vector<graphs::Edge>{};
    const int n = (int)edges.size();
    std::vector<std::vector<bool>> crossing(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) {
        Segment si{positions.at(edges[i].first), positions.at(edges[i].second)};
        for (int j = i + 1; j < n; ++j) {
            bool independent = edges[i].first != edges[j].first &&
                               edges[i].first != edges[j].second &&
                               edges[i].second != edges[j].first &&
                               edges[i].second != edges[j].second;
            if (!independent) continue;
            Segment sj{positions.at(edges[j].first), positions.at(edges[j].second)};
            if (proper_crossing(si, sj)) crossing[i][j] = crossing[j][i] = true;
        }
    }

    std::vector<int> clique;
    std::function<bool(int)> grow = [&](int start) {
        if ((int)clique.size() == k) return true;
        for (int v = start; v < n; ++v) {
            if (n - v < k - (int)clique.size()) return false;
            bool ok = true;
            for (int u : clique)
                if (!crossing[u][v]) { ok = false; break; }
            if (!ok) continue;
            clique.push_back(v);
            if (grow(v + 1)) return true;
            clique.pop_back();
        }
        return false;
    };
    if (!grow(0)) return std::nullopt;
    std::vector<graphs::Edge> out;
    for (int i : clique) out.push_back(edges[i]);
    return out;
}

} // namespace planeweave::arr
