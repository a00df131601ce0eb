#include "planeweave/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "planeweave/exactgeom.hpp"

namespace planeweave::verify {

using geom::Crossing;
using geom::segments_cross;
using layout::color_name;

std::string FeasibilityReport::serialize() const {
    std::ostringstream out;
    for (int i = 0; i < 6; ++i) {
        out << "C" << (i + 1) << (constraint[i].pass ? " PASS" : " FAIL");
        if (!constraint[i].pass && !constraint[i].witness.empty())
            out << " " << constraint[i].witness;
        out << "\n";
    }
    out << "OVERALL " << (overall ? "PASS" : "FAIL") << "\n";
    return out.str();
}

namespace {

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

Segment edge_segment(const ColoredDrawing& d, const Edge& e) {
    return Segment{d.pos.at(e.first), d.pos.at(e.second)};
}

// Does segment e intersect the closed horizontal ray from v to the right?
bool hits_right_ray(const Point& v, const Segment& e) {
    Rat da = e.a.y - v.y, db = e.b.y - v.y;
    int sa = sgn(da), sb = sgn(db);
    if (sa > 0 && sb > 0) return false;
    if (sa < 0 && sb < 0) return false;
    if (sa == 0 && sb == 0) return std::max(e.a.x, e.b.x) >= v.x;
    if (sa == 0) return e.a.x >= v.x;
    if (sb == 0) return e.b.x >= v.x;
    Rat xStar = e.a.x + (v.y - e.a.y) * (e.b.x - e.a.x) / (e.b.y - e.a.y);
    return xStar >= v.x;
}

// Does segment e intersect the closed vertical ray from v downwards?
bool hits_down_ray(const Point& v, const Segment& e) {
    Rat da = e.a.x - v.x, db = e.b.x - v.x;
    int sa = sgn(da), sb = sgn(db);
    if (sa > 0 && sb > 0) return false;
    if (sa < 0 && sb < 0) return false;
    if (sa == 0 && sb == 0) return std::min(e.a.y, e.b.y) <= v.y;
    if (sa == 0) return e.a.y <= v.y;
    if (sb == 0) return e.b.y <= v.y;
    Rat yStar = e.a.y + (v.x - e.a.x) * (e.b.y - e.a.y) / (e.b.x - e.a.x);
    return yStar <= v.y;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

FeasibilityReport check_feasible(const ColoredDrawing& d, const DegenerateGraph& g, int k) {
    graphs::HeightMap hm = graphs::heights(g);

    std::set<int> expected;
    for (int v = 0; v < g.vertexCount; ++v)
        if (hm.height[v] <= k) expected.insert(v);
    std::set<int> got;
    for (auto& [v, p] : d.pos) got.insert(v);
    if (expected != got)
        throw ShapeMismatch("drawing does not cover exactly the vertices of height <= " +
                            std::to_string(k));
    for (auto& [e, c] : d.color)
        if (!expected.count(e.first) || !expected.count(e.second))
            throw ShapeMismatch("colored edge outside the drawn subgraph " + edge_str(e));

    FeasibilityReport report;
    auto fail = [&report](int idx, const std::string& witness) {
        if (report.constraint[idx].pass) {
            report.constraint[idx].pass = false;
            report.constraint[idx].witness = witness;
            report.overall = false;
        }
    };

    // C1
    for (int v : got) {
        std::vector<EdgeColor> predColors;
        bool missing = false;
        for (int u : g.preds[v]) {
            auto it = d.color.find(graphs::edge(u, v));
            if (it == d.color.end()) { missing = true; break; }
            predColors.push_back(it->second);
        }
        if (missing) {
            fail(0, "uncolored predecessor edge at v=" + std::to_string(v));
            continue;
        }
        if (predColors.size() == 2 && predColors[0] == predColors[1])
            fail(0, "v=" + std::to_string(v) + " has same-colored predecessor edges");
        if (k > 0 && hm.height[v] == k) {
            for (EdgeColor c : predColors)
                if (c != EdgeColor::h && c != EdgeColor::hs)
                    fail(0, "top-level v=" + std::to_string(v) + " has a " + color_name(c) + " edge");
        }
    }

    // C2
    {
        std::optional<Rat> maxBelow, minTop;
        for (auto& [v, p] : d.pos) {
            if (hm.height[v] == k) {
                if (!minTop || p.x < *minTop) minTop = p.x;
            } else if (!maxBelow || p.x > *maxBelow) {
                maxBelow = p.x;
            }
        }
        if (maxBelow && minTop && !(*maxBelow < *minTop))
            fail(1, "no x separator: max below = " + format_rat(*maxBelow) +
                        ", min top = " + format_rat(*minTop));
    }

    // C3
    {
        auto crossings = monochromatic_crossings(d);
        if (!crossings.empty())
            fail(2, "edges " + edge_str(crossings[0].first) + " and " +
                        edge_str(crossings[0].second) + " cross with one color");
    }

    // C4
    {
        std::vector<std::pair<Rat, int>> xs, ys;
        for (auto& [v, p] : d.pos) {
            xs.push_back({p.x, v});
            ys.push_back({p.y, v});
        }
        std::sort(xs.begin(), xs.end());
        std::sort(ys.begin(), ys.end());
        for (std::size_t i = 1; i < xs.size(); ++i)
            if (xs[i].first == xs[i - 1].first)
                fail(3, "v=" + std::to_string(xs[i - 1].second) + " and v=" +
                            std::to_string(xs[i].second) + " share an x-coordinate");
        for (std::size_t i = 1; i < ys.size(); ++i)
            if (ys[i].first == ys[i - 1].first)
                fail(3, "v=" + std::to_string(ys[i - 1].second) + " and v=" +
                            std::to_string(ys[i].second) + " share a y-coordinate");
    }

    // C5 / C6
    for (auto& [v, p] : d.pos) {
        for (auto& [e, c] : d.color) {
            if (e.first == v || e.second == v) continue;
            if (c == EdgeColor::h && hits_right_ray(p, edge_segment(d, e)))
                fail(4, "v=" + std::to_string(v) + " not h-open: edge " + edge_str(e));
            if (c == EdgeColor::v && hits_down_ray(p, edge_segment(d, e)))
                fail(5, "v=" + std::to_string(v) + " not v-open: edge " + edge_str(e));
        }
    }

    return report;
}

std::vector<std::pair<Edge, Edge>> monochromatic_crossings(const ColoredDrawing& d) {
    std::vector<std::pair<Edge, Edge>> out;
    std::vector<std::pair<Edge, EdgeColor>> edges(d.color.begin(), d.color.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (edges[i].second != edges[j].second) continue;
            try {
                if (segments_cross(edge_segment(d, edges[i].first),
                                   edge_segment(d, edges[j].first)) == Crossing::Proper)
                    out.push_back({edges[i].first, edges[j].first});
            } catch (const OverlapError&) {
                out.push_back({edges[i].first, edges[j].first});
            }
        }
    }
    return out;
}

bool color_class_is_forest(const ColoredDrawing& d, EdgeColor c) {
    std::map<int, int> index;
    for (auto& [v, p] : d.pos) {
        int next = (int)index.size();
        index[v] = next;
    }
    UnionFind uf((int)index.size());
    for (auto& [e, col] : d.color) {
        if (col != c) continue;
        if (!uf.unite(index.at(e.first), index.at(e.second))) return false;
    }
    return true;
}

ConflictGraph build_conflict_graph(const std::map<int, Point>& positions,
                                   const std::vector<Edge>& edges) {
    ConflictGraph cg;
    cg.nodes = edges;
    cg.adj.assign(edges.size(), {});
    for (std::size_t i = 0; i < edges.size(); ++i) {
        Segment si{positions.at(edges[i].first), positions.at(edges[i].second)};
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            Segment sj{positions.at(edges[j].first), positions.at(edges[j].second)};
            if (segments_cross(si, sj) == Crossing::Proper) {
                cg.adj[i].push_back((int)j);
                cg.adj[j].push_back((int)i);
            }
        }
    }
    return cg;
}

namespace {

// Greedy clique, used as a lower bound for the exact search.
int greedy_clique_bound(const ConflictGraph& cg) {
    int n = cg.nodeCount();
    if (n == 0) return 0;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&cg](int a, int b) { return cg.adj[a].size() > cg.adj[b].size(); });
    std::vector<std::set<int>> neighbor(n);
    for (int v = 0; v < n; ++v) neighbor[v] = {cg.adj[v].begin(), cg.adj[v].end()};
    int best = 1;
    for (int seed : order) {
        std::vector<int> clique{seed};
        for (int cand : order) {
            if (cand == seed) continue;
            bool ok = true;
            for (int c : clique)
                if (!neighbor[c].count(cand)) { ok = false; break; }
            if (ok) clique.push_back(cand);
        }
        best = std::max(best, (int)clique.size());
    }
    return best;
}

// Union-find with explicit undo, for the forest constraint during search.
struct UndoableUnionFind {
    std::vector<int> parent, size;
    std::vector<std::pair<int, int>> log; // (absorbed root, into root)
    explicit UndoableUnionFind(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] > size[b]) std::swap(a, b);
        parent[a] = b;
        size[b] += size[a];
        log.push_back({a, b});
        return true;
    }
    std::size_t mark() const { return log.size(); }
    void rollback(std::size_t mark) {
        while (log.size() > mark) {
            auto [a, b] = log.back();
            log.pop_back();
            parent[a] = a;
            size[b] -= size[a];
        }
    }
};

struct DecompositionSearch {
    const ConflictGraph& cg;
    int colorsAllowed = 0;
    std::vector<int> order;        // node visit order
    std::vector<int> color;        // per node, -1 unassigned
    // Forest constraint state; empty when not used.
    std::vector<UndoableUnionFind> forest;
    std::vector<std::pair<int, int>> endpoints; // per node, indexed vertex pair

    explicit DecompositionSearch(const ConflictGraph& graph) : cg(graph) {}

    bool conflictFree(int node, int c) const {
        for (int nb : cg.adj[node])
            if (color[nb] == c) return false;
        return true;
    }

    bool assign(std::size_t idx, int usedColors) {
        if (idx == order.size()) return true;
        int node = order[idx];
        int tryUpTo = std::min(colorsAllowed, usedColors + 1);
        for (int c = 0; c < tryUpTo; ++c) {
            if (!conflictFree(node, c)) continue;
            std::size_t mark = 0;
            if (!forest.empty()) {
                mark = forest[c].mark();
                if (!forest[c].unite(endpoints[node].first, endpoints[node].second)) continue;
            }
            color[node] = c;
            if (assign(idx + 1, std::max(usedColors, c + 1))) return true;
            color[node] = -1;
            if (!forest.empty()) forest[c].rollback(mark);
        }
        return false;
    }
};

std::vector<int> default_order(const ConflictGraph& cg) {
    std::vector<int> order(cg.nodeCount());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&cg](int a, int b) {
        return cg.adj[a].size() > cg.adj[b].size();
    });
    return order;
}

DecompositionResult dsatur_bound(const ConflictGraph& cg) {
    int n = cg.nodeCount();
    DecompositionResult result;
    result.coloring.assign(n, -1);
    result.exact = false;
    std::vector<std::set<int>> saturation(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (result.coloring[v] != -1) continue;
            if (best == -1 || saturation[v].size() > saturation[best].size() ||
                (saturation[v].size() == saturation[best].size() &&
                 cg.adj[v].size() > cg.adj[best].size()))
                best = v;
        }
        int c = 0;
        while (saturation[best].count(c)) ++c;
        result.coloring[best] = c;
        result.colorCount = std::max(result.colorCount, c + 1);
        for (int nb : cg.adj[best]) saturation[nb].insert(c);
    }
    return result;
}

} // namespace

DecompositionResult min_plane_decomposition(const ConflictGraph& cg, int exactLimit) {
    if (cg.nodeCount() == 0) return DecompositionResult{0, {}, true};
    if (cg.nodeCount() > exactLimit) return dsatur_bound(cg);

    DecompositionSearch search(cg);
    search.order = default_order(cg);
    for (int target = greedy_clique_bound(cg);; ++target) {
        search.color.assign(cg.nodeCount(), -1);
        search.colorsAllowed = target;
        if (search.assign(0, 0))
            return DecompositionResult{target, search.color, true};
    }
}

DecompositionResult min_plane_forest_decomposition(const ColoredDrawing& d, int exactLimit) {
    std::vector<Edge> edges;
    for (auto& [e, c] : d.color) edges.push_back(e);
    if (edges.empty()) return DecompositionResult{0, {}, true};

    ConflictGraph cg = build_conflict_graph(d.pos, edges);

    std::map<int, int> vertexIndex;
    for (auto& [v, p] : d.pos) {
        int next = (int)vertexIndex.size();
        vertexIndex[v] = next;
    }
    std::vector<std::pair<int, int>> endpoints;
    for (auto& e : edges)
        endpoints.push_back({vertexIndex.at(e.first), vertexIndex.at(e.second)});

    if (cg.nodeCount() > exactLimit) {
        // Greedy: first color that keeps the class plane and acyclic.
        DecompositionResult result;
        result.exact = false;
        result.coloring.assign(edges.size(), -1);
        std::vector<UndoableUnionFind> forest;
        std::vector<int> order = default_order(cg);
        for (int node : order) {
            int c = 0;
            for (;; ++c) {
                if (c == (int)forest.size())
                    forest.emplace_back((int)vertexIndex.size());
                bool ok = true;
                for (int nb : cg.adj[node])
                    if (result.coloring[nb] == c) { ok = false; break; }
                if (ok && forest[c].unite(endpoints[node].first, endpoints[node].second)) break;
            }
            result.coloring[node] = c;
            result.colorCount = std::max(result.colorCount, c + 1);
        }
        return result;
    }

    DecompositionSearch search(cg);
    search.order = default_order(cg);
    search.endpoints = endpoints;
    for (int target = std::max(1, greedy_clique_bound(cg));; ++target) {
        search.color.assign(cg.nodeCount(), -1);
        search.colorsAllowed = target;
        search.forest.clear();
        for (int c = 0; c < target; ++c) search.forest.emplace_back((int)vertexIndex.size());
        if (search.assign(0, 0))
            return DecompositionResult{target, search.color, true};
    }
}

} // namespace planeweave::verify
