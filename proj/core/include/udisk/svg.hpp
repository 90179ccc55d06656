#pragma once

#include "udisk/geometry.hpp"
#include "udisk/graph.hpp"

#include <string>

namespace udisk {

struct SvgOptions {
    double scale = 20.0;  // pixels per model unit
    double margin = 2.0;  // model units around the bounding box
    bool draw_edges = true;
    bool draw_labels = false;
};

/// Deterministic SVG rendering: one unit circle per vertex, straight edges
/// between adjacent centers (the induced embedding). Byte-identical output
/// for identical input.
std::string export_svg(const Graph& g, const DiskLayout& layout, const SvgOptions& options = {});
std::string export_svg(const Graph& g, const GridLayout& layout, const SvgOptions& options = {});

} // namespace udisk
