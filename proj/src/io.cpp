#include "planeweave/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace planeweave::io {

namespace {

// Line-oriented reader skipping blanks and '#' comments.
std::vector<std::vector<std::string>> tokenize_lines(std::istream& in) {
    std::vector<std::vector<std::string>> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ss(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ss >> tok) tokens.push_back(tok);
        if (!tokens.empty()) lines.push_back(std::move(tokens));
    }
    return lines;
}

int parse_int(const std::string& s) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw ParseError("bad integer: " + s);
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        throw ParseError("bad integer: " + s);
    }
}

} // namespace

GraphFile parse_graph(std::istream& in) {
    GraphFile g;
    bool haveN = false;
    for (auto& tokens : tokenize_lines(in)) {
        if (tokens[0] == "n" && tokens.size() == 2) {
            g.vertexCount = parse_int(tokens[1]);
            if (g.vertexCount < 0) throw ParseError("negative vertex count");
            g.layer.assign(g.vertexCount, -1);
            haveN = true;
        } else if (tokens[0] == "e" && tokens.size() == 3) {
            if (!haveN) throw ParseError("edge before header");
            int u = parse_int(tokens[1]), v = parse_int(tokens[2]);
            if (u < 0 || v < 0 || u >= g.vertexCount || v >= g.vertexCount || u == v)
                throw ParseError("bad edge " + tokens[1] + " " + tokens[2]);
            g.edges.push_back(graphs::edge(u, v));
        } else if (tokens[0] == "l" && tokens.size() == 3) {
            if (!haveN) throw ParseError("layer tag before header");
            int v = parse_int(tokens[1]);
            if (v < 0 || v >= g.vertexCount) throw ParseError("bad layer vertex");
            g.layer[v] = parse_int(tokens[2]);
        } else {
            throw ParseError("unrecognized graph line starting with '" + tokens[0] + "'");
        }
    }
    if (!haveN) throw ParseError("missing 'n' header");
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

void write_graph(std::ostream& out, const GraphFile& g) {
    out << "n " << g.vertexCount << "\n";
    for (auto& [u, v] : g.edges) out << "e " << u << " " << v << "\n";
    for (int v = 0; v < g.vertexCount; ++v)
        if (v < (int)g.layer.size() && g.layer[v] >= 0) out << "l " << v << " " << g.layer[v] << "\n";
}

GraphFile to_graph_file(const graphs::DegenerateGraph& g) {
    return GraphFile{g.vertexCount, g.edges, g.layer};
}

layout::ColoredDrawing parse_drawing(std::istream& in) {
    layout::ColoredDrawing d;
    for (auto& tokens : tokenize_lines(in)) {
        if (tokens[0] == "v" && tokens.size() == 4) {
            int id = parse_int(tokens[1]);
            if (d.pos.count(id)) throw ParseError("duplicate vertex " + tokens[1]);
            d.pos[id] = Point{parse_rat(tokens[2]), parse_rat(tokens[3])};
        } else if (tokens[0] == "c" && tokens.size() == 4) {
            int u = parse_int(tokens[1]), w = parse_int(tokens[2]);
            auto color = layout::color_from_name(tokens[3]);
            if (u == w || !color) throw ParseError("bad colored edge line");
            d.color[graphs::edge(u, w)] = *color;
        } else {
            throw ParseError("unrecognized drawing line starting with '" + tokens[0] + "'");
        }
    }
    for (auto& [e, c] : d.color)
        if (!d.pos.count(e.first) || !d.pos.count(e.second))
            throw ParseError("colored edge references unplaced vertex");
    return d;
}

void write_drawing(std::ostream& out, const layout::ColoredDrawing& d) {
    for (auto& [v, p] : d.pos)
        out << "v " << v << " " << format_rat(p.x) << " " << format_rat(p.y) << "\n";
    for (auto& [e, c] : d.color)
        out << "c " << e.first << " " << e.second << " " << layout::color_name(c) << "\n";
}

arr::ColoredSegmentFamily parse_segments(std::istream& in) {
    std::vector<Segment> red, blue;
    for (auto& tokens : tokenize_lines(in)) {
        if ((tokens[0] == "r" || tokens[0] == "b") && tokens.size() == 5) {
            Segment s{Point{parse_rat(tokens[1]), parse_rat(tokens[2])},
                      Point{parse_rat(tokens[3]), parse_rat(tokens[4])}};
            (tokens[0] == "r" ? red : blue).push_back(s);
        } else {
            throw ParseError("unrecognized segment line starting with '" + tokens[0] + "'");
        }
    }
    return arr::make_family(std::move(red), std::move(blue));
}

void write_segments(std::ostream& out, const arr::ColoredSegmentFamily& f) {
    for (auto& s : f.red)
        out << "r " << format_rat(s.a.x) << " " << format_rat(s.a.y) << " " << format_rat(s.b.x)
            << " " << format_rat(s.b.y) << "\n";
    for (auto& s : f.blue)
        out << "b " << format_rat(s.a.x) << " " << format_rat(s.a.y) << " " << format_rat(s.b.x)
            << " " << format_rat(s.b.y) << "\n";
}

void write_svg(std::ostream& out, const layout::ColoredDrawing& d, const SvgOptions& options) {
    double minX = 0, maxX = 1, minY = 0, maxY = 1;
    bool first = true;
    auto toX = [&options](const Rat& r) { return r.get_d() * options.scale; };
    auto toY = [&options](const Rat& r) { return -r.get_d() * options.scale; }; // y up
    for (auto& [v, p] : d.pos) {
        double x = toX(p.x), y = toY(p.y);
        if (first) {
            minX = maxX = x;
            minY = maxY = y;
            first = false;
        } else {
            minX = std::min(minX, x); maxX = std::max(maxX, x);
            minY = std::min(minY, y); maxY = std::max(maxY, y);
        }
    }
    double margin = std::max({(maxX - minX) * 0.05, (maxY - minY) * 0.05, 1.0});
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (minX - margin) << " "
        << (minY - margin) << " " << (maxX - minX + 2 * margin) << " "
        << (maxY - minY + 2 * margin) << "\">\n";
    out << "  <style>\n"
           "    line { stroke-width: 0.5%; }\n"
           "    .h  { stroke: #1f77b4; }\n"
           "    .hs { stroke: #d62728; }\n"
           "    .v  { stroke: #2ca02c; }\n"
           "    .vs { stroke: #9467bd; }\n"
           "    circle { fill: #222222; }\n"
           "    text { font-size: 2.5%; fill: #555555; }\n"
           "  </style>\n";
    for (auto& [e, c] : d.color) {
        const Point& a = d.pos.at(e.first);
        const Point& b = d.pos.at(e.second);
        out << "  <line class=\"" << layout::color_name(c) << "\" x1=\"" << toX(a.x) << "\" y1=\""
            << toY(a.y) << "\" x2=\"" << toX(b.x) << "\" y2=\"" << toY(b.y) << "\"/>\n";
    }
    for (auto& [v, p] : d.pos) {
        out << "  <circle cx=\"" << toX(p.x) << "\" cy=\"" << toY(p.y) << "\" r=\"0.6%\"/>\n";
        if (options.exactLabels)
            out << "  <text x=\"" << toX(p.x) << "\" y=\"" << toY(p.y) << "\">" << v << " ("
                << format_rat(p.x) << "," << format_rat(p.y) << ")</text>\n";
    }
    out << "</svg>\n";
}

} // namespace planeweave::io
