#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "planeweave/arrangements.hpp"
#include "planeweave/graphs.hpp"
#include "planeweave/layout.hpp"

namespace planeweave::io {

// Graph file: "n <vertexCount>", one "e <u> <v>" per edge, optional
// "l <v> <layer>" tags. 0-based ids, '#' comments allowed.
struct GraphFile {
    int vertexCount = 0;
    std::vector<graphs::Edge> edges;
    std::vector<int> layer; // -1 when untagged
};

GraphFile parse_graph(std::istream& in);
void write_graph(std::ostream& out, const GraphFile& g);
GraphFile to_graph_file(const graphs::DegenerateGraph& g);

// Drawing file: "v <id> <x> <y>" with rational coordinates as p/q, one
// "c <u> <w> <h|hs|v|vs>" per colored edge.
layout::ColoredDrawing parse_drawing(std::istream& in);
void write_drawing(std::ostream& out, const layout::ColoredDrawing& d);

// Segment-family file: "r <x1> <y1> <x2> <y2>" / "b <x1> <y1> <x2> <y2>".
arr::ColoredSegmentFamily parse_segments(std::istream& in);
void write_segments(std::ostream& out, const arr::ColoredSegmentFamily& f);

struct SvgOptions {
    double scale = 1.0;
    bool exactLabels = false;
};

// Rendering is display-only: rationals are converted to double here and
// nowhere else.
void write_svg(std::ostream& out, const layout::ColoredDrawing& d, const SvgOptions& options = {});

} // namespace planeweave::io
