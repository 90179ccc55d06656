#include "udisk/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace udisk {

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

} // namespace

std::string export_svg(const Graph& g, const DiskLayout& layout, const SvgOptions& options) {
    if (static_cast<int>(layout.centers.size()) != g.n)
        throw std::invalid_argument("export_svg: layout is not total on V(g)");

    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    if (g.n > 0) {
        min_x = max_x = layout.centers[0].x;
        min_y = max_y = layout.centers[0].y;
        for (Point2 p : layout.centers) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    const double pad = 1.0 + options.margin; // disk radius + margin
    const double s = options.scale;
    double w = (max_x - min_x + 2 * pad) * s;
    double h = (max_y - min_y + 2 * pad) * s;
    auto X = [&](double x) { return (x - min_x + pad) * s; };
    auto Y = [&](double y) { return (max_y - y + pad) * s; }; // flip: SVG y grows down

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) + "\" height=\"" + fmt(h) +
           "\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\">\n";
    if (options.draw_edges) {
        for (auto [u, v] : g.edges()) {
            out += "  <line x1=\"" + fmt(X(layout.centers[u].x)) + "\" y1=\"" +
                   fmt(Y(layout.centers[u].y)) + "\" x2=\"" + fmt(X(layout.centers[v].x)) +
                   "\" y2=\"" + fmt(Y(layout.centers[v].y)) +
                   "\" stroke=\"#333333\" stroke-width=\"" + fmt(0.05 * s) + "\"/>\n";
        }
    }
    for (int v = 0; v < g.n; ++v) {
        out += "  <circle cx=\"" + fmt(X(layout.centers[v].x)) + "\" cy=\"" +
               fmt(Y(layout.centers[v].y)) + "\" r=\"" + fmt(s) +
               "\" fill=\"#4477aa\" fill-opacity=\"0.25\" stroke=\"#224466\" stroke-width=\"" +
               fmt(0.03 * s) + "\"/>\n";
        if (options.draw_labels) {
            out += "  <text x=\"" + fmt(X(layout.centers[v].x)) + "\" y=\"" +
                   fmt(Y(layout.centers[v].y)) + "\" font-size=\"" + fmt(0.5 * s) +
                   "\" text-anchor=\"middle\">" + std::to_string(v) + "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

std::string export_svg(const Graph& g, const GridLayout& layout, const SvgOptions& options) {
    return export_svg(g, to_disk_layout(layout), options);
}

} // namespace udisk
