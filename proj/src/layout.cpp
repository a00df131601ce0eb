#include "planeweave/layout.hpp"

#include <algorithm>

namespace planeweave::layout {

using geom::slanted_horizontal_meet;

std::string color_name(EdgeColor c) {
    switch (c) {
        case EdgeColor::h: return "h";
        case EdgeColor::hs: return "hs";
        case EdgeColor::v: return "v";
        case EdgeColor::vs: return "vs";
    }
    return "?";
}

std::optional<EdgeColor> color_from_name(const std::string& name) {
    if (name == "h") return EdgeColor::h;
    if (name == "hs") return EdgeColor::hs;
    if (name == "v") return EdgeColor::v;
    if (name == "vs") return EdgeColor::vs;
    return std::nullopt;
}

ColoredDrawing reflect_and_swap(const ColoredDrawing& d) {
    ColoredDrawing out;
    out.heightOfDrawing = d.heightOfDrawing;
    out.separator = -d.separator; // stale until the next level is placed
    for (auto& [v, p] : d.pos) out.pos[v] = Point{-p.y, -p.x};
    for (auto& [e, c] : d.color) {
        EdgeColor swapped = c;
        switch (c) {
            case EdgeColor::h: swapped = EdgeColor::v; break;
            case EdgeColor::v: swapped = EdgeColor::h; break;
            case EdgeColor::hs: swapped = EdgeColor::vs; break;
            case EdgeColor::vs: swapped = EdgeColor::hs; break;
        }
        out.color[e] = swapped;
    }
    return out;
}

namespace {

// Largest power of two <= q (q > 0). Keeping slopes and epsilons dyadic stops
// coordinate bit lengths from compounding multiplicatively across levels.
Rat floor_pow2(const Rat& q) {
    long e = (long)mpz_sizeinbase(q.get_num().get_mpz_t(), 2) -
             (long)mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
    mpz_class one = 1;
    auto pow2 = [&one](long exp) {
        Rat r;
        if (exp >= 0) {
            mpz_class v;
            mpz_mul_2exp(v.get_mpz_t(), one.get_mpz_t(), (unsigned long)exp);
            r = Rat(v);
        } else {
            mpz_class v;
            mpz_mul_2exp(v.get_mpz_t(), one.get_mpz_t(), (unsigned long)(-exp));
            r = Rat(1) / Rat(v);
        }
        return r;
    };
    Rat candidate = pow2(e);
    while (candidate > q) candidate /= 2;
    while (candidate * 2 <= q) candidate *= 2;
    return candidate;
}

} // namespace

Rat choose_slope(const ColoredDrawing& d) {
    if (d.pos.size() < 2) throw DegenerateInput("choose_slope: need at least two vertices");
    std::vector<Rat> ys;
    Rat xMin, xMax;
    bool first = true;
    for (auto& [v, p] : d.pos) {
        ys.push_back(p.y);
        if (first) { xMin = xMax = p.x; first = false; }
        else {
            if (p.x < xMin) xMin = p.x;
            if (p.x > xMax) xMax = p.x;
        }
    }
    std::sort(ys.begin(), ys.end());
    std::optional<Rat> minGap;
    for (std::size_t i = 1; i < ys.size(); ++i) {
        Rat gap = ys[i] - ys[i - 1];
        if (gap == 0) continue;
        if (!minGap || gap < *minGap) minGap = gap;
    }
    if (!minGap) throw DegenerateInput("choose_slope: all vertices share one y-coordinate");
    Rat slope = *minGap / (xMax - xMin + 1);
    // cap at 1 so sqrt(1+m^2) < 2, which the epsilon surrogate for (iv) needs
    if (slope > 1) slope = 1;
    return floor_pow2(slope);
}

namespace {

// Smallest gap between consecutive distinct values; empty when all equal.
std::optional<Rat> min_adjacent_gap(std::vector<Rat> values) {
    std::sort(values.begin(), values.end());
    std::optional<Rat> best;
    for (std::size_t i = 1; i < values.size(); ++i) {
        Rat gap = values[i] - values[i - 1];
        if (gap == 0) continue;
        if (!best || gap < *best) best = gap;
    }
    return best;
}

} // namespace

Rat choose_epsilon(const ColoredDrawing& d, const Rat& m) {
    if (d.pos.size() <= 1) return rat(1);

    std::vector<Point> pts;
    pts.reserve(d.pos.size());
    for (auto& [v, p] : d.pos) pts.push_back(p);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) throw DegenerateInput("choose_epsilon: coincident vertices");

    std::optional<Rat> bound;
    auto consider = [&bound](const std::optional<Rat>& candidate) {
        if (candidate && (!bound || *candidate < *bound)) bound = *candidate;
    };

    // (ii) vertical gaps between vertices
    std::vector<Rat> ys;
    for (auto& p : pts) ys.push_back(p.y);
    consider(min_adjacent_gap(ys));

    // (iii) horizontal gaps between slanted/horizontal meet points
    std::vector<Rat> meetXs;
    for (auto& u : pts)
        for (auto& v : pts)
            if (u.y < v.y) meetXs.push_back(slanted_horizontal_meet(u, m, v).x);
    consider(min_adjacent_gap(meetXs));

    // (iv) gaps between the slope-m lines, via the vertical surrogate halved
    // (sound because choose_slope keeps m <= 1, so sqrt(1+m^2) < 2)
    std::vector<Rat> intercepts;
    for (auto& p : pts) intercepts.push_back(p.y - m * p.x);
    if (auto gap = min_adjacent_gap(intercepts)) consider(*gap / 2);

    if (!bound) return rat(1);
    return floor_pow2(*bound / 2);
}

PlacementSchedule build_schedule(const ColoredDrawing& d, const std::vector<NewVertex>& newLevel,
                                 const Rat& m) {
    struct Keyed {
        Point p;
        int horizontalSource;
        int slantedSource;
        int vertex;
    };
    std::vector<Keyed> items;
    items.reserve(newLevel.size());
    for (const auto& nv : newLevel) {
        auto itU = d.pos.find(nv.predU);
        auto itV = d.pos.find(nv.predV);
        if (itU == d.pos.end() || itV == d.pos.end())
            throw PreconditionError("build_schedule: predecessor not placed");
        int u = nv.predU, v = nv.predV;
        if (itU->second.y > itV->second.y) std::swap(u, v);
        const Point& pu = d.pos.at(u);
        const Point& pv = d.pos.at(v);
        items.push_back(Keyed{slanted_horizontal_meet(pu, m, pv), v, u, nv.vertex});
    }
    std::sort(items.begin(), items.end(), [](const Keyed& a, const Keyed& b) {
        if (a.p.y != b.p.y) return a.p.y < b.p.y;
        if (a.p.x != b.p.x) return a.p.x < b.p.x;
        return a.vertex < b.vertex;
    });

    PlacementSchedule schedule;
    int rank = 0;
    for (auto& item : items) {
        if (schedule.groups.empty() || !(schedule.groups.back().p == item.p)) {
            schedule.groups.push_back(PlacementGroup{item.p, item.horizontalSource,
                                                     item.slantedSource, {}});
        }
        auto& group = schedule.groups.back();
        group.vertices.push_back(item.vertex);
        schedule.assignment[item.vertex] = {(int)schedule.groups.size() - 1,
                                            (int)group.vertices.size()};
        schedule.globalRank[item.vertex] = ++rank;
    }
    return schedule;
}

ColoredDrawing place_level(const ColoredDrawing& d, const PlacementSchedule& schedule,
                           const Rat& m, const Rat& eps) {
    ColoredDrawing out = d;

    std::optional<Rat> xMax;
    for (auto& [v, p] : d.pos)
        if (!xMax || p.x > *xMax) xMax = p.x;
    if (xMax) out.separator = *xMax;

    Rat base = eps / (1 + m);
    for (const auto& group : schedule.groups) {
        for (int w : group.vertices) {
            int r = schedule.globalRank.at(w);
            Rat delta = base;
            mpz_class pow2;
            mpz_ui_pow_ui(pow2.get_mpz_t(), 2, (unsigned long)r);
            delta /= Rat(pow2);
            out.pos[w] = Point{group.p.x + delta * m, group.p.y - delta};
            out.color[graphs::edge(w, group.horizontalSource)] = EdgeColor::h;
            out.color[graphs::edge(w, group.slantedSource)] = EdgeColor::hs;
        }
    }
    out.heightOfDrawing = d.heightOfDrawing + 1;
    return out;
}

ColoredDrawing construct_drawing(const DegenerateGraph& g, const LevelHook& hook) {
    auto [normalized, dummyId] = graphs::normalize_predecessors(g);
    graphs::HeightMap hm = graphs::heights(normalized);

    // Base case: height-0 vertices on the main diagonal, ascending id.
    ColoredDrawing d;
    {
        std::vector<int> level0 = hm.levels[0];
        std::sort(level0.begin(), level0.end());
        long i = 0;
        for (int v : level0) {
            d.pos[v] = point(i, i);
            ++i;
        }
        d.heightOfDrawing = 0;
        d.separator = rat(-1);
    }
    if (hook) hook(d, normalized, 0, rat(0), rat(0));

    for (int k = 1; k < (int)hm.levels.size(); ++k) {
        d = reflect_and_swap(d);
        Rat m = choose_slope(d);
        Rat eps = choose_epsilon(d, m);

        std::vector<NewVertex> level;
        for (int w : hm.levels[k])
            level.push_back(NewVertex{w, normalized.preds[w][0], normalized.preds[w][1]});
        PlacementSchedule schedule = build_schedule(d, level, m);
        d = place_level(d, schedule, m, eps);
        if (hook) hook(d, normalized, k, m, eps);
    }

    if (dummyId) {
        d.pos.erase(*dummyId);
        for (auto it = d.color.begin(); it != d.color.end();) {
            if (it->first.first == *dummyId || it->first.second == *dummyId)
                it = d.color.erase(it);
            else
                ++it;
        }
    }
    return d;
}

CoordinateStats coordinate_stats(const ColoredDrawing& d) {
    CoordinateStats stats;
    stats.vertices = d.pos.size();
    for (auto& [v, p] : d.pos) {
        stats.maxBits = std::max(stats.maxBits, rat_bits(p.x));
        stats.maxBits = std::max(stats.maxBits, rat_bits(p.y));
    }
    return stats;
}

} // namespace planeweave::layout
