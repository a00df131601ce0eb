#include <doctest.h>

#include "planeweave/verify.hpp"
#include "support.hpp"

using namespace planeweave;
using namespace planeweave::layout;
using namespace planeweave::verify;
using testsupport::Rng;

namespace {

// 2-path a-b-c drawn feasibly by the construction, then tampered with.
ColoredDrawing small_feasible(graphs::DegenerateGraph& g) {
    g = graphs::degeneracy_order(3, {{0, 1}, {1, 2}});
    return construct_drawing(g);
}

} // namespace

TEST_CASE("check_feasible passes construction output and demands shape agreement") {
    graphs::DegenerateGraph g;
    ColoredDrawing d = small_feasible(g);
    int k = (int)graphs::heights(g).levels.size() - 1;
    CHECK(check_feasible(d, g, k).overall);
    CHECK_THROWS_AS(check_feasible(d, g, k - 1), ShapeMismatch);
    ColoredDrawing missing = d;
    missing.pos.erase(missing.pos.begin());
    CHECK_THROWS_AS(check_feasible(missing, g, k), ShapeMismatch);
}

TEST_CASE("check_feasible catches planted C4 violation") {
    graphs::DegenerateGraph g;
    ColoredDrawing d = small_feasible(g);
    int k = (int)graphs::heights(g).levels.size() - 1;
    auto it = d.pos.begin();
    Point first = it->second;
    ++it;
    it->second.y = first.y; // two vertices on one horizontal line
    auto report = check_feasible(d, g, k);
    CHECK(!report.overall);
    CHECK(!report.constraint[3].pass);
    CHECK(report.serialize().find("C4 FAIL") != std::string::npos);
}

TEST_CASE("check_feasible catches planted C3 violation") {
    graphs::DegenerateGraph g = graphs::degeneracy_order(4, {{0, 1}, {2, 3}});
    ColoredDrawing d;
    d.pos[0] = point(0, 0);
    d.pos[1] = point(10, 13);
    d.pos[2] = point(1, 11);
    d.pos[3] = point(9, 2);
    d.color[{0, 1}] = EdgeColor::h;
    d.color[{2, 3}] = EdgeColor::h; // crossing, same color
    auto report = check_feasible(d, g, 1);
    CHECK(!report.constraint[2].pass);
}

TEST_CASE("check_feasible catches recolored C1 violation") {
    // K3's apex has two predecessor edges; recolor them identically
    auto g = graphs::degeneracy_order(3, {{0, 1}, {0, 2}, {1, 2}});
    ColoredDrawing d = construct_drawing(g);
    int k = (int)graphs::heights(g).levels.size() - 1;
    auto hm = graphs::heights(g);
    int top = hm.levels.back().front();
    REQUIRE(g.preds[top].size() == 2);
    for (int u : g.preds[top]) d.color[graphs::edge(u, top)] = EdgeColor::h;
    auto report = check_feasible(d, g, k);
    CHECK(!report.constraint[0].pass);

    // a top-level vertex must not carry a v-colored predecessor edge
    ColoredDrawing d2 = construct_drawing(g);
    d2.color[graphs::edge(g.preds[top][0], top)] = EdgeColor::v;
    CHECK(!check_feasible(d2, g, k).constraint[0].pass);
}

TEST_CASE("monochromatic_crossings") {
    auto g = graphs::generate_lower_bound_graph(3, 1);
    CHECK(monochromatic_crossings(construct_drawing(g)).empty());

    ColoredDrawing cross;
    cross.pos[0] = point(0, 0);
    cross.pos[1] = point(2, 2);
    cross.pos[2] = point(0, 2);
    cross.pos[3] = point(2, 0);
    cross.color[{0, 1}] = EdgeColor::h;
    cross.color[{2, 3}] = EdgeColor::h;
    CHECK(monochromatic_crossings(cross).size() == 1);
    cross.color[{2, 3}] = EdgeColor::v; // crossings across colors are fine
    CHECK(monochromatic_crossings(cross).empty());
}

TEST_CASE("color_class_is_forest") {
    ColoredDrawing triangle;
    triangle.pos[0] = point(0, 0);
    triangle.pos[1] = point(4, 1);
    triangle.pos[2] = point(2, 5);
    triangle.color[{0, 1}] = EdgeColor::hs;
    triangle.color[{1, 2}] = EdgeColor::hs;
    triangle.color[{0, 2}] = EdgeColor::hs;
    CHECK(!color_class_is_forest(triangle, EdgeColor::hs));
    CHECK(color_class_is_forest(triangle, EdgeColor::h)); // empty class

    for (auto c : {EdgeColor::h, EdgeColor::hs, EdgeColor::v, EdgeColor::vs}) {
        auto g = graphs::random_2degenerate(20, 5);
        CHECK(color_class_is_forest(construct_drawing(g), c));
    }
}

TEST_CASE("build_conflict_graph") {
    std::map<int, Point> pos{{0, point(0, 0)}, {1, point(4, 0)}, {2, point(4, 4)},
                             {3, point(0, 4)}};
    // plane 4-cycle: no conflicts
    std::vector<graphs::Edge> cycle{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    auto cg = build_conflict_graph(pos, cycle);
    for (auto& adj : cg.adj) CHECK(adj.empty());

    // K4 drawn with one crossing: exactly one conflict pair
    std::vector<graphs::Edge> k4{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}};
    auto cgK4 = build_conflict_graph(pos, k4);
    int conflicts = 0;
    for (auto& adj : cgK4.adj) conflicts += (int)adj.size();
    CHECK(conflicts == 2); // one unordered pair

    // five long segments of distinct slopes with tiny offsets all cross near
    // the origin pairwise -> conflict graph K5
    std::map<int, Point> star;
    std::vector<graphs::Edge> spokes;
    const long slopes[5] = {0, 1, 3, -3, -1};
    for (int i = 0; i < 5; ++i) {
        Rat offset = rat(i, 7);
        star[2 * i] = Point{rat(-100), rat(-100 * slopes[i]) + offset};
        star[2 * i + 1] = Point{rat(100), rat(100 * slopes[i]) + offset};
        spokes.push_back({2 * i, 2 * i + 1});
    }
    auto cgStar = build_conflict_graph(star, spokes);
    for (auto& adj : cgStar.adj) CHECK(adj.size() == 4);

    std::map<int, Point> overlap{{0, point(0, 0)}, {1, point(4, 0)}, {2, point(1, 0)},
                                 {3, point(3, 0)}};
    CHECK_THROWS_AS(build_conflict_graph(overlap, {{0, 1}, {2, 3}}), OverlapError);
}

TEST_CASE("min_plane_decomposition") {
    ConflictGraph edgeless;
    edgeless.nodes = {{0, 1}, {2, 3}};
    edgeless.adj.assign(2, {});
    auto r1 = min_plane_decomposition(edgeless);
    CHECK(r1.colorCount == 1);
    CHECK(r1.exact);

    ConflictGraph k5;
    for (int i = 0; i < 5; ++i) k5.nodes.push_back({2 * i, 2 * i + 1});
    k5.adj.assign(5, {});
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (i != j) k5.adj[i].push_back(j);
    auto r2 = min_plane_decomposition(k5);
    CHECK(r2.colorCount == 5);
    CHECK(r2.exact);
    // heuristic path flagged as such
    auto r3 = min_plane_decomposition(k5, 3);
    CHECK(!r3.exact);
    CHECK(r3.colorCount >= 5);
}

TEST_CASE("decompositions of constructed drawings stay within four colors") {
    Rng rng(47);
    for (int iter = 0; iter < 8; ++iter) {
        auto g = graphs::random_2degenerate(10 + (int)rng.below(10), rng.next());
        ColoredDrawing d = construct_drawing(g);
        std::vector<graphs::Edge> edges;
        for (auto& [e, c] : d.color) edges.push_back(e);
        auto cg = build_conflict_graph(d.pos, edges);
        auto plane = min_plane_decomposition(cg);
        auto forest = min_plane_forest_decomposition(d);
        CHECK(plane.exact);
        CHECK(forest.exact);
        CHECK(plane.colorCount <= forest.colorCount);
        CHECK(forest.colorCount <= 4);
        CHECK(forest.colorCount <= 3 * std::max(1, plane.colorCount));
    }
}

TEST_CASE("min_plane_forest_decomposition needs two colors for a triangle") {
    ColoredDrawing star;
    star.pos[0] = point(0, 0);
    for (int i = 1; i <= 4; ++i) {
        star.pos[i] = point(7 * i - 11, 5 + 3 * i);
        star.color[{0, i}] = EdgeColor::h;
    }
    auto starResult = min_plane_forest_decomposition(star);
    CHECK(starResult.colorCount == 1); // stars are forests

    ColoredDrawing triangle;
    triangle.pos[0] = point(0, 0);
    triangle.pos[1] = point(4, 1);
    triangle.pos[2] = point(2, 5);
    triangle.color[{0, 1}] = EdgeColor::h;
    triangle.color[{1, 2}] = EdgeColor::h;
    triangle.color[{0, 2}] = EdgeColor::h;
    auto triResult = min_plane_forest_decomposition(triangle);
    CHECK(triResult.colorCount == 2);
    CHECK(triResult.exact);
}

TEST_CASE("verification is invariant under positive scaling and translation") {
    Rng rng(89);
    auto g = graphs::random_2degenerate(14, 31);
    ColoredDrawing d = construct_drawing(g);
    int k = (int)graphs::heights(g).levels.size() - 1;
    REQUIRE(check_feasible(d, g, k).overall);

    for (int iter = 0; iter < 5; ++iter) {
        Rat scale = rat(rng.range(1, 60), rng.range(1, 9));
        Rat tx = rat(rng.range(-500, 500), rng.range(1, 7));
        Rat ty = rat(rng.range(-500, 500), rng.range(1, 7));
        ColoredDrawing moved = d;
        for (auto& [v, p] : moved.pos) p = Point{p.x * scale + tx, p.y * scale + ty};
        moved.separator = d.separator * scale + tx;
        CHECK(check_feasible(moved, g, k).overall);
        CHECK(monochromatic_crossings(moved).empty());
        for (auto c : {EdgeColor::h, EdgeColor::hs, EdgeColor::v, EdgeColor::vs})
            CHECK(color_class_is_forest(moved, c) == color_class_is_forest(d, c));
    }

    // and a planted violation stays violated
    ColoredDrawing bad = d;
    auto it = bad.pos.begin();
    Point first = it->second;
    ++it;
    it->second.y = first.y;
    ColoredDrawing badMoved = bad;
    for (auto& [v, p] : badMoved.pos) p = Point{p.x * 3, p.y * 3};
    CHECK(check_feasible(bad, g, k).constraint[3].pass ==
          check_feasible(badMoved, g, k).constraint[3].pass);
}
