#include "udisk/geometry.hpp"

#include "udisk/graph.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace udisk {

namespace {
constexpr double kSqrt3 = 1.7320508075688772;
}

Point2 grid_to_euclid(GridCoord c) {
    return {static_cast<double>(2 * c.a + c.b), c.b * kSqrt3};
}

std::int64_t grid_dist2(GridCoord p, GridCoord q) {
    std::int64_t ex = (2 * p.a + p.b) - (2 * q.a + q.b);
    std::int64_t db = p.b - q.b;
    return ex * ex + 3 * db * db;
}

std::array<GridCoord, 6> grid_neighbors(GridCoord c) {
    return {GridCoord{c.a + 1, c.b},     GridCoord{c.a, c.b + 1},
            GridCoord{c.a - 1, c.b + 1}, GridCoord{c.a - 1, c.b},
            GridCoord{c.a, c.b - 1},     GridCoord{c.a + 1, c.b - 1}};
}

bool grid_adjacent(GridCoord p, GridCoord q) { return grid_dist2(p, q) == 4; }

int grid_norm(GridCoord c) {
    return (std::abs(c.a) + std::abs(c.b) + std::abs(c.a + c.b)) / 2;
}

GridCoord grid_reflect_x(GridCoord c) { return {c.a + c.b, -c.b}; }

DiskLayout to_disk_layout(const GridLayout& gl) {
    DiskLayout dl;
    dl.centers.reserve(gl.cells.size());
    for (GridCoord c : gl.cells) dl.centers.push_back(grid_to_euclid(c));
    return dl;
}

bool ConvexPolygon::contains(Point2 p) const {
    size_t m = pts.size();
    if (m == 0) return false;
    if (m == 1) return dist(pts[0], p) <= 1e-12;
    for (size_t i = 0; i < m; ++i) {
        Point2 a = pts[i], b = pts[(i + 1) % m];
        double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
        if (cross < -1e-12) return false;
    }
    return true;
}

ConvexPolygon make_rhombus(double width, double height, Point2 center) {
    return {{{center.x + width / 2, center.y},
             {center.x, center.y + height / 2},
             {center.x - width / 2, center.y},
             {center.x, center.y - height / 2}}};
}

ConvexPolygon make_regular_hexagon(double side, Point2 center) {
    ConvexPolygon p;
    for (int k = 0; k < 6; ++k) {
        double ang = std::numbers::pi / 3.0 * k;
        p.pts.push_back({center.x + side * std::cos(ang), center.y + side * std::sin(ang)});
    }
    return p;
}

std::string serialize_disk_layout(const DiskLayout& l) {
    std::string out;
    char buf[96];
    for (size_t v = 0; v < l.centers.size(); ++v) {
        std::snprintf(buf, sizeof(buf), "%zu %.12g %.12g\n", v, l.centers[v].x, l.centers[v].y);
        out += buf;
    }
    return out;
}

std::string serialize_grid_layout(const GridLayout& l) {
    std::string out;
    char buf[64];
    for (size_t v = 0; v < l.cells.size(); ++v) {
        std::snprintf(buf, sizeof(buf), "%zu %d %d\n", v, l.cells[v].a, l.cells[v].b);
        out += buf;
    }
    return out;
}

namespace {

template <typename Cell, typename ParseLine>
std::vector<Cell> parse_layout_lines(std::string_view text, ParseLine parse_line) {
    std::map<long long, Cell> rows;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string line(text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos));
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++lineno;
        if (size_t h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream in(line);
        long long v;
        if (!(in >> v)) continue; // blank
        Cell c;
        if (!parse_line(in, c)) throw ParseError(lineno, "malformed layout line");
        if (v < 0 || rows.count(v)) throw ParseError(lineno, "bad vertex id");
        rows[v] = c;
    }
    if (rows.empty()) return {};
    long long maxv = rows.rbegin()->first;
    if (static_cast<long long>(rows.size()) != maxv + 1)
        throw ParseError(lineno, "layout is missing vertices");
    std::vector<Cell> out(rows.size());
    for (auto& [v, c] : rows) out[v] = c;
    return out;
}

} // namespace

DiskLayout parse_disk_layout(std::string_view text) {
    DiskLayout l;
    l.centers = parse_layout_lines<Point2>(text, [](std::istringstream& in, Point2& p) {
        return static_cast<bool>(in >> p.x >> p.y);
    });
    return l;
}

GridLayout parse_grid_layout(std::string_view text) {
    GridLayout l;
    l.cells = parse_layout_lines<GridCoord>(text, [](std::istringstream& in, GridCoord& c) {
        return static_cast<bool>(in >> c.a >> c.b);
    });
    return l;
}

} // namespace udisk
