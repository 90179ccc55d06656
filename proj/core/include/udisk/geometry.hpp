#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace udisk {

struct Point2 {
    double x = 0, y = 0;

    Point2 operator+(Point2 o) const { return {x + o.x, y + o.y}; }
    Point2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
    Point2 operator*(double s) const { return {x * s, y * s}; }
    double norm() const { return std::hypot(x, y); }
};

inline double dist(Point2 p, Point2 q) { return (p - q).norm(); }
inline double dist2(Point2 p, Point2 q) {
    double dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}
inline Point2 unit_dir(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Axial coordinates on the triangular grid with edge length 2.
/// Euclidean embedding: x = 2a + b, y = b * sqrt(3). Adjacency and distance
/// tests are exact integer arithmetic.
struct GridCoord {
    int a = 0, b = 0;

    friend bool operator==(GridCoord, GridCoord) = default;
    GridCoord operator+(GridCoord o) const { return {a + o.a, b + o.b}; }
    GridCoord operator-(GridCoord o) const { return {a - o.a, b - o.b}; }

    /// Euclidean x-coordinate (always an integer).
    int euclid_x() const { return 2 * a + b; }
};

Point2 grid_to_euclid(GridCoord c);

/// Squared Euclidean distance between cells, exact.
std::int64_t grid_dist2(GridCoord p, GridCoord q);

/// The six cells at Euclidean distance exactly 2, counterclockwise from (+1,0).
std::array<GridCoord, 6> grid_neighbors(GridCoord c);

bool grid_adjacent(GridCoord p, GridCoord q);

/// Grid distance in steps (hex norm on axial coordinates).
int grid_norm(GridCoord c);

/// Reflection across the horizontal axis through the origin:
/// (a, b) -> (a + b, -b). Preserves Euclidean x.
GridCoord grid_reflect_x(GridCoord c);

/// Continuous-plane layout: unit-radius disk centers, one per vertex.
struct DiskLayout {
    std::vector<Point2> centers;
};

/// Triangular-grid layout; must be injective to be a weak UDC.
struct GridLayout {
    std::vector<GridCoord> cells;
};

DiskLayout to_disk_layout(const GridLayout& gl);

struct ConvexPolygon {
    std::vector<Point2> pts; // counterclockwise

    bool contains(Point2 p) const;
};

ConvexPolygon make_rhombus(double width, double height, Point2 center = {});
ConvexPolygon make_regular_hexagon(double side, Point2 center = {});

/// Layout serialization: one "v x y" line per vertex (12 significant digits)
/// for disk layouts, "v a b" for grid layouts.
std::string serialize_disk_layout(const DiskLayout& l);
std::string serialize_grid_layout(const GridLayout& l);
DiskLayout parse_disk_layout(std::string_view text);
GridLayout parse_grid_layout(std::string_view text);

} // namespace udisk
