#include "planeweave/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "planeweave/io.hpp"
#include "planeweave/verify.hpp"

namespace planeweave::cli {

namespace {

int exact_limit_default() {
    if (const char* env = std::getenv("PLANEWEAVE_EXACT_LIMIT")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (...) {
        }
    }
    return 60;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    return out;
}

graphs::DegenerateGraph load_graph(const std::string& path) {
    auto in = open_in(path);
    io::GraphFile gf = io::parse_graph(in);
    graphs::DegenerateGraph g = graphs::degeneracy_order(gf.vertexCount, gf.edges);
    g.layer = gf.layer;
    return g;
}

int cmd_generate(const std::string& family, int n, int multiplicity, std::uint64_t seed,
                 std::int64_t cap, const std::string& outPath, std::ostream& out) {
    graphs::DegenerateGraph g;
    if (family == "lower-bound") {
        g = graphs::generate_lower_bound_graph(n, multiplicity, cap);
        std::map<int, int> sizes;
        for (int v = 0; v < g.vertexCount; ++v) ++sizes[g.layer[v]];
        for (auto& [layer, count] : sizes)
            out << "layer " << layer << ": " << count << " vertices\n";
    } else if (family == "random") {
        g = graphs::random_2degenerate(n, seed);
    } else {
        throw CLI::ValidationError("--family must be lower-bound or random");
    }
    out << "vertices " << g.vertexCount << ", edges " << g.edges.size() << "\n";
    auto file = open_out(outPath);
    io::write_graph(file, io::to_graph_file(g));
    return 0;
}

int cmd_draw(const std::string& inPath, const std::string& outPath, bool trace,
             std::ostream& out) {
    auto g = load_graph(inPath);
    layout::LevelHook hook;
    bool allLevelsFeasible = true;
    if (trace) {
        hook = [&out, &allLevelsFeasible](const layout::ColoredDrawing& partial,
                                          const graphs::DegenerateGraph& normalized, int level,
                                          const Rat& m, const Rat& eps) {
            out << "level " << level;
            if (level > 0) out << "  m=" << format_rat(m) << "  eps=" << format_rat(eps);
            out << "\n";
            auto report = verify::check_feasible(partial, normalized, level);
            out << report.serialize();
            if (!report.overall) allLevelsFeasible = false;
        };
    }
    layout::ColoredDrawing d = layout::construct_drawing(g, hook);
    auto file = open_out(outPath);
    io::write_drawing(file, d);
    auto stats = layout::coordinate_stats(d);
    out << "drawn " << stats.vertices << " vertices, " << d.color.size()
        << " edges, max coordinate bits " << stats.maxBits << "\n";
    return allLevelsFeasible ? 0 : 1;
}

int run_verification(const std::string& graphPath, const std::string& drawingPath,
                     std::ostream& out, bool withDecomposition, int exactLimit) {
    auto g = load_graph(graphPath);
    auto in = open_in(drawingPath);
    layout::ColoredDrawing d = io::parse_drawing(in);
    graphs::HeightMap hm = graphs::heights(g);
    int k = (int)hm.levels.size() - 1;
    d.heightOfDrawing = k;

    bool pass = true;
    try {
        auto report = verify::check_feasible(d, g, k);
        out << report.serialize();
        pass = report.overall;
    } catch (const ShapeMismatch& e) {
        out << "SHAPE FAIL " << e.what() << "\n";
        return 1;
    }
    for (auto c : {layout::EdgeColor::h, layout::EdgeColor::hs, layout::EdgeColor::v,
                   layout::EdgeColor::vs}) {
        bool forest = verify::color_class_is_forest(d, c);
        out << "FOREST " << layout::color_name(c) << (forest ? " PASS" : " FAIL") << "\n";
        pass = pass && forest;
    }
    if (withDecomposition) {
        std::vector<graphs::Edge> edges;
        for (auto& [e, c] : d.color) edges.push_back(e);
        auto cg = verify::build_conflict_graph(d.pos, edges);
        auto plane = verify::min_plane_decomposition(cg, exactLimit);
        auto forest = verify::min_plane_forest_decomposition(d, exactLimit);
        out << "plane decomposition: " << plane.colorCount
            << (plane.exact ? "" : " (heuristic upper bound)") << "\n";
        out << "plane forest decomposition: " << forest.colorCount
            << (forest.exact ? "" : " (heuristic upper bound)") << "\n";
    }
    return pass ? 0 : 1;
}

int cmd_decompose(const std::string& drawingPath, int exactLimit, std::ostream& out) {
    auto in = open_in(drawingPath);
    layout::ColoredDrawing d = io::parse_drawing(in);
    std::vector<graphs::Edge> edges;
    for (auto& [e, c] : d.color) edges.push_back(e);
    auto cg = verify::build_conflict_graph(d.pos, edges);
    auto plane = verify::min_plane_decomposition(cg, exactLimit);
    auto forest = verify::min_plane_forest_decomposition(d, exactLimit);
    out << "edges " << edges.size() << ", conflicts ";
    std::size_t conflicts = 0;
    for (auto& adj : cg.adj) conflicts += adj.size();
    out << conflicts / 2 << "\n";
    out << "plane decomposition: " << plane.colorCount
        << (plane.exact ? " (exact)" : " (heuristic upper bound)") << "\n";
    out << "plane forest decomposition: " << forest.colorCount
        << (forest.exact ? " (exact)" : " (heuristic upper bound)") << "\n";
    return 0;
}

int cmd_gridfind(const std::string& segmentsPath, int k, std::ostream& out) {
    auto in = open_in(segmentsPath);
    arr::ColoredSegmentFamily f = io::parse_segments(in);
    arr::GridSearchResult result = arr::find_k_grid(f, k);
    if (result.certificate) {
        auto& cert = *result.certificate;
        out << "grid k=" << k << "\nred:";
        for (int i : cert.redIdx) out << " " << i;
        out << "\nblue:";
        for (int j : cert.blueIdx) out << " " << j;
        out << "\norder along reds:";
        for (int j : cert.crossOrderRed) out << " " << cert.blueIdx[j];
        out << "\norder along blues:";
        for (int i : cert.crossOrderBlue) out << " " << cert.redIdx[i];
        out << "\nverified: " << (arr::is_grid_equivalent(cert, f) ? "yes" : "NO") << "\n";
        return 0;
    }
    out << (result.exhaustive ? "none (exhaustive)" : "none (inconclusive)") << "\n";
    return 0;
}

int cmd_nogk(int k, const std::string& outPath, std::ostream& out) {
    arr::ColoredSegmentFamily f = arr::generate_no_grid_family(k);
    auto file = open_out(outPath);
    io::write_segments(file, f);
    out << "wrote " << f.red.size() << " red and " << f.blue.size() << " blue segments\n";
    return 0;
}

int cmd_svg(const std::string& drawingPath, const std::string& outPath, double scale,
            bool exactLabels, std::ostream& out) {
    auto in = open_in(drawingPath);
    layout::ColoredDrawing d = io::parse_drawing(in);
    auto file = open_out(outPath);
    io::write_svg(file, d, io::SvgOptions{scale, exactLabels});
    out << "wrote " << outPath << "\n";
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"straight-line drawings of 2-degenerate graphs as four plane forests"};
    app.name("planeweave");
    app.require_subcommand(1);

    std::string family = "random", inPath, outPath, graphPath, drawingPath, segmentsPath;
    int n = 10, multiplicity = 89, k = 2;
    std::uint64_t seed = 1;
    std::int64_t cap = 10'000'000;
    bool trace = false, exactLabels = false;
    double scale = 1.0;
    int exactLimit = exact_limit_default();

    auto* generate = app.add_subcommand("generate", "write a graph file");
    generate->add_option("--family", family)->check(CLI::IsMember({"lower-bound", "random"}));
    generate->add_option("--n", n)->required();
    generate->add_option("--multiplicity", multiplicity);
    generate->add_option("--seed", seed);
    generate->add_option("--cap", cap);
    generate->add_option("--out", outPath)->required();

    auto* draw = app.add_subcommand("draw", "construct a 4-colored drawing");
    draw->add_option("--in", inPath)->required();
    draw->add_option("--out", outPath)->required();
    draw->add_flag("--trace", trace, "print per-level slope, epsilon and feasibility");

    auto* verifyCmd = app.add_subcommand("verify", "check a drawing against its graph");
    verifyCmd->add_option("--graph", graphPath)->required();
    verifyCmd->add_option("--drawing", drawingPath)->required();

    auto* decompose = app.add_subcommand("decompose", "minimum plane/forest decompositions");
    decompose->add_option("--drawing", drawingPath)->required();
    decompose->add_option("--exact-limit", exactLimit);

    auto* gridfind = app.add_subcommand("gridfind", "search a segment family for a k-grid");
    gridfind->add_option("--segments", segmentsPath)->required();
    gridfind->add_option("--k", k)->required();

    auto* nogk = app.add_subcommand("nogk", "write the 3k+3k no-grid family");
    nogk->add_option("--k", k)->required();
    nogk->add_option("--out", outPath)->required();

    auto* svg = app.add_subcommand("svg", "render a drawing (display only)");
    svg->add_option("--drawing", drawingPath)->required();
    svg->add_option("--out", outPath)->required();
    svg->add_option("--scale", scale);
    svg->add_flag("--exact-labels", exactLabels);

    auto* report = app.add_subcommand("report", "verify plus decomposition summary");
    report->add_option("--graph", graphPath)->required();
    report->add_option("--drawing", drawingPath)->required();
    report->add_option("--exact-limit", exactLimit);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "flag error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (generate->parsed()) return cmd_generate(family, n, multiplicity, seed, cap, outPath, out);
        if (draw->parsed()) return cmd_draw(inPath, outPath, trace, out);
        if (verifyCmd->parsed()) return run_verification(graphPath, drawingPath, out, false, exactLimit);
        if (decompose->parsed()) return cmd_decompose(drawingPath, exactLimit, out);
        if (gridfind->parsed()) return cmd_gridfind(segmentsPath, k, out);
        if (nogk->parsed()) return cmd_nogk(k, outPath, out);
        if (svg->parsed()) return cmd_svg(drawingPath, outPath, scale, exactLabels, out);
        if (report->parsed()) return run_verification(graphPath, drawingPath, out, true, exactLimit);
    } catch (const SizeOverflow& e) {
        err << "size overflow: " << e.what() << "\n";
        return 3;
    } catch (const NotTwoDegenerate& e) {
        err << "not 2-degenerate: " << e.what() << "\n";
        return 4;
    } catch (const NotAllCrossing& e) {
        err << "not all-crossing: " << e.what() << "\n";
        return 5;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        err << "flag error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace planeweave::cli
