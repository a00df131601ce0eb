#include "planeweave/graphs.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace planeweave::graphs {

void DegenerateGraph::validate() const {
    if ((int)order.size() != vertexCount || (int)preds.size() != vertexCount)
        throw Error("graph: order/preds size mismatch");
    std::vector<int> posInOrder(vertexCount, -1);
    for (int i = 0; i < vertexCount; ++i) {
        int v = order[i];
        if (v < 0 || v >= vertexCount || posInOrder[v] != -1)
            throw Error("graph: order is not a permutation");
        posInOrder[v] = i;
    }
    std::set<Edge> fromPreds;
    for (int v = 0; v < vertexCount; ++v) {
        if (preds[v].size() > 2) throw Error("graph: vertex with more than 2 predecessors");
        for (int u : preds[v]) {
            if (u == v) throw Error("graph: self-loop");
            if (posInOrder[u] >= posInOrder[v])
                throw Error("graph: predecessor not earlier in order");
            if (!fromPreds.insert(edge(u, v)).second)
                throw Error("graph: duplicate edge in predecessor lists");
        }
    }
    std::set<Edge> declared(edges.begin(), edges.end());
    if (declared.size() != edges.size()) throw Error("graph: parallel edges");
    if (declared != fromPreds) throw Error("graph: edges and predecessor lists disagree");
}

DegenerateGraph degeneracy_order(int vertexCount, std::vector<Edge> edgeList) {
    std::sort(edgeList.begin(), edgeList.end());
    edgeList.erase(std::unique(edgeList.begin(), edgeList.end()), edgeList.end());

    std::vector<std::vector<int>> adj(vertexCount);
    for (auto& [u, v] : edgeList) {
        if (u == v) throw Error("degeneracy_order: self-loop");
        if (u < 0 || v < 0 || u >= vertexCount || v >= vertexCount)
            throw Error("degeneracy_order: vertex id out of range");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    std::vector<int> degree(vertexCount);
    std::set<int> eligible; // degree <= 2, not yet removed; smallest id first
    for (int v = 0; v < vertexCount; ++v) {
        degree[v] = (int)adj[v].size();
        if (degree[v] <= 2) eligible.insert(v);
    }

    std::vector<bool> removed(vertexCount, false);
    std::vector<int> peel;
    std::vector<std::vector<int>> preds(vertexCount);
    peel.reserve(vertexCount);
    while (!eligible.empty()) {
        int v = *eligible.begin();
        eligible.erase(eligible.begin());
        removed[v] = true;
        peel.push_back(v);
        for (int u : adj[v]) {
            if (removed[u]) continue;
            preds[v].push_back(u); // neighbors still present are v's predecessors
            if (--degree[u] == 2) eligible.insert(u);
        }
    }
    if ((int)peel.size() != vertexCount)
        throw NotTwoDegenerate("remaining subgraph has minimum degree >= 3 (" +
                               std::to_string(vertexCount - peel.size()) + " vertices left)");

    DegenerateGraph g;
    g.vertexCount = vertexCount;
    g.edges = std::move(edgeList);
    g.order.assign(peel.rbegin(), peel.rend());
    g.preds = std::move(preds);
    g.layer.assign(vertexCount, -1);
    return g;
}

HeightMap heights(const DegenerateGraph& g) {
    HeightMap hm;
    hm.height.assign(g.vertexCount, 0);
    int maxHeight = 0;
    for (int v : g.order) {
        int h = 0;
        for (int u : g.preds[v]) h = std::max(h, hm.height[u] + 1);
        hm.height[v] = h;
        maxHeight = std::max(maxHeight, h);
    }
    hm.levels.assign(maxHeight + 1, {});
    for (int v = 0; v < g.vertexCount; ++v) hm.levels[hm.height[v]].push_back(v);
    return hm;
}

NormalizedGraph normalize_predecessors(const DegenerateGraph& g) {
    bool needsDummy = false;
    for (int v = 0; v < g.vertexCount; ++v)
        if (g.preds[v].size() == 1) needsDummy = true;
    if (!needsDummy) return {g, std::nullopt};

    DegenerateGraph out = g;
    int dummy = g.vertexCount;
    out.vertexCount = g.vertexCount + 1;
    out.preds.emplace_back();
    out.layer.push_back(-1);
    out.order.clear();
    out.order.push_back(dummy);
    out.order.insert(out.order.end(), g.order.begin(), g.order.end());
    for (int v = 0; v < g.vertexCount; ++v) {
        if (out.preds[v].size() == 1) {
            out.preds[v].push_back(dummy);
            out.edges.push_back(edge(v, dummy));
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    return {out, dummy};
}

DegenerateGraph strip_dummy(const DegenerateGraph& g, std::optional<int> dummyId) {
    if (!dummyId) return g;
    int dummy = *dummyId;
    if (dummy != g.vertexCount - 1)
        throw UnknownVertex("strip_dummy: dummy must be the last vertex id");

    DegenerateGraph out;
    out.vertexCount = g.vertexCount - 1;
    for (auto& e : g.edges)
        if (e.first != dummy && e.second != dummy) out.edges.push_back(e);
    for (int v : g.order)
        if (v != dummy) out.order.push_back(v);
    out.preds.assign(out.vertexCount, {});
    for (int v = 0; v < out.vertexCount; ++v)
        for (int u : g.preds[v])
            if (u != dummy) out.preds[v].push_back(u);
    out.layer.assign(g.layer.begin(), g.layer.begin() + out.vertexCount);
    return out;
}

LowerBoundSizes lower_bound_sizes(int n, int multiplicity) {
    if (n < 2) throw Error("lower_bound_sizes: n must be >= 2");
    if (multiplicity < 1) throw Error("lower_bound_sizes: multiplicity must be >= 1");
    auto choose2 = [](__int128 m) -> __int128 { return m * (m - 1) / 2; };
    auto narrow = [](__int128 v) -> std::int64_t {
        if (v > 4'000'000'000'000'000'000LL) throw SizeOverflow("G(n) layer size overflows");
        return (std::int64_t)v;
    };
    LowerBoundSizes s{};
    s.lambda0 = n;
    s.lambda1 = narrow(choose2(n));
    s.lambda2 = narrow((__int128)multiplicity * choose2(s.lambda1));
    if (s.lambda2 > 200'000'000) // guard the final pair enumeration
        throw SizeOverflow("G(n): lambda2 too large to enumerate pairs");
    s.lambda3 = narrow(choose2(s.lambda2));
    return s;
}

DegenerateGraph generate_lower_bound_graph(int n, int multiplicity, std::int64_t vertexCap) {
    LowerBoundSizes sizes = lower_bound_sizes(n, multiplicity);
    if (sizes.vertexCount() > vertexCap)
        throw SizeOverflow("G(n) would have " + std::to_string(sizes.vertexCount()) +
                           " vertices (cap " + std::to_string(vertexCap) + ")");

    DegenerateGraph g;
    g.vertexCount = (int)sizes.vertexCount();
    g.edges.reserve((std::size_t)sizes.edgeCount());
    g.preds.assign(g.vertexCount, {});
    g.layer.assign(g.vertexCount, 0);
    g.order.resize(g.vertexCount);
    for (int v = 0; v < g.vertexCount; ++v) g.order[v] = v;

    int next = n;
    std::vector<int> prev(n);
    for (int i = 0; i < n; ++i) prev[i] = i;

    auto addLayer = [&](int tag, const std::vector<int>& below, int copies) {
        std::vector<int> added;
        for (std::size_t i = 0; i < below.size(); ++i) {
            for (std::size_t j = i + 1; j < below.size(); ++j) {
                for (int c = 0; c < copies; ++c) {
                    int w = next++;
                    g.layer[w] = tag;
                    g.preds[w] = {below[i], below[j]};
                    g.edges.push_back(edge(below[i], w));
                    g.edges.push_back(edge(below[j], w));
                    added.push_back(w);
                }
            }
        }
        return added;
    };

    std::vector<int> l1 = addLayer(1, prev, 1);
    std::vector<int> l2 = addLayer(2, l1, multiplicity);
    addLayer(3, l2, 1);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

namespace {

// Minimal deterministic generator: identical sequences on every platform,
// unlike std::uniform_int_distribution.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

} // namespace

DegenerateGraph random_2degenerate(int n, std::uint64_t seed, const RandomGraphOptions& options) {
    if (n < 0) throw Error("random_2degenerate: n must be >= 0");
    SplitMix64 rng{seed * 0x2545F4914F6CDD1DULL + 0x9E3779B97F4A7C15ULL};

    DegenerateGraph g;
    g.vertexCount = n;
    g.preds.assign(n, {});
    g.layer.assign(n, -1);
    g.order.resize(n);
    for (int v = 0; v < n; ++v) g.order[v] = v;

    for (int v = 1; v < n; ++v) {
        int roll = (int)rng.below(100);
        int want = 2;
        if (roll < options.zeroPredPercent) want = 0;
        else if (roll < options.zeroPredPercent + options.onePredPercent) want = 1;
        if (v == 1 && want == 2) want = 1;

        if (want >= 1) {
            int a = (int)rng.below(v);
            g.preds[v].push_back(a);
            if (want == 2) {
                int b = (int)rng.below(v - 1);
                if (b >= a) ++b; // distinct from a
                g.preds[v].push_back(b);
            }
            for (int u : g.preds[v]) g.edges.push_back(edge(u, v));
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

} // namespace planeweave::graphs
