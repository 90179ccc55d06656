#include "udisk/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace udisk {

namespace {

// Nearest-center queries over a uniform bucket grid with expanding rings.
class CenterIndex {
public:
    explicit CenterIndex(const std::vector<Point2>& pts) : pts_(pts) {
        for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
            int x = cx(pts[i].x), y = cy(pts[i].y);
            buckets_[key(x, y)].push_back(i);
            box_lo_x_ = std::min(box_lo_x_, x);
            box_hi_x_ = std::max(box_hi_x_, x);
            box_lo_y_ = std::min(box_lo_y_, y);
            box_hi_y_ = std::max(box_hi_y_, y);
        }
    }

    double nearest_dist(Point2 p) const {
        int bx = cx(p.x), by = cy(p.y);
        // Rings beyond the far corner of the bucket bounding box hold no centers.
        int cap = std::max({box_hi_x_ - bx, bx - box_lo_x_, box_hi_y_ - by, by - box_lo_y_, 0});
        double best = std::numeric_limits<double>::infinity();
        for (int ring = 0; ring <= cap; ++ring) {
            if (best < std::numeric_limits<double>::infinity() && (ring - 1) * kCell > best) break;
            for (int dx = -ring; dx <= ring; ++dx)
                for (int dy = -ring; dy <= ring; ++dy) {
                    if (std::max(std::abs(dx), std::abs(dy)) != ring) continue;
                    auto it = buckets_.find(key(bx + dx, by + dy));
                    if (it == buckets_.end()) continue;
                    for (int i : it->second) best = std::min(best, dist(p, pts_[i]));
                }
        }
        return best;
    }

private:
    static constexpr double kCell = 2.0;
    static std::int64_t key(int x, int y) {
        return (static_cast<std::int64_t>(x) << 32) ^ (static_cast<std::int64_t>(y) & 0xffffffffLL);
    }
    static int cx(double x) { return static_cast<int>(std::floor(x / kCell)); }
    static int cy(double y) { return static_cast<int>(std::floor(y / kCell)); }

    const std::vector<Point2>& pts_;
    std::unordered_map<std::int64_t, std::vector<int>> buckets_;
    int box_lo_x_ = 1 << 28, box_hi_x_ = -(1 << 28);
    int box_lo_y_ = 1 << 28, box_hi_y_ = -(1 << 28);
};

} // namespace

double hausdorff_to_union(const ConvexPolygon& polygon, const DiskLayout& layout, double step) {
    if (step <= 0) throw std::invalid_argument("hausdorff_to_union: step must be positive");
    if (layout.centers.empty()) throw std::invalid_argument("hausdorff_to_union: empty layout");
    if (polygon.pts.empty()) return 0.0;

    CenterIndex index(layout.centers);
    auto gap = [&](Point2 p) { return std::max(0.0, index.nearest_dist(p) - 1.0); };

    double worst = 0.0;

    // Boundary, sampled at pitch <= step/2.
    size_t m = polygon.pts.size();
    for (size_t i = 0; i < m; ++i) {
        Point2 a = polygon.pts[i];
        Point2 b = polygon.pts[(i + 1) % m];
        double len = dist(a, b);
        int segs = std::max(1, static_cast<int>(std::ceil(len / (step / 2))));
        for (int k = 0; k <= segs; ++k) {
            double t = static_cast<double>(k) / segs;
            worst = std::max(worst, gap({a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t}));
        }
        if (m == 1) break;
    }

    // Interior: per grid column, sample the polygon's y-interval including its
    // endpoints, so every interior point is within step*sqrt(2)/2 of a sample.
    double min_x = polygon.pts[0].x, max_x = min_x;
    for (Point2 p : polygon.pts) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
    }
    for (double x = std::ceil(min_x / step) * step; x <= max_x; x += step) {
        // Intersect the vertical line with the convex boundary.
        double ylo = std::numeric_limits<double>::infinity();
        double yhi = -std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < m; ++i) {
            Point2 a = polygon.pts[i], b = polygon.pts[(i + 1) % m];
            if ((a.x - x) * (b.x - x) > 0) continue;
            double y;
            if (std::abs(b.x - a.x) < 1e-15) {
                ylo = std::min({ylo, a.y, b.y});
                yhi = std::max({yhi, a.y, b.y});
                continue;
            }
            y = a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
            ylo = std::min(ylo, y);
            yhi = std::max(yhi, y);
            if (m == 1) break;
        }
        if (ylo > yhi) continue;
        worst = std::max(worst, std::max(gap({x, ylo}), gap({x, yhi})));
        for (double y = std::ceil(ylo / step) * step; y <= yhi; y += step)
            worst = std::max(worst, gap({x, y}));
    }

    return worst + step * std::sqrt(2.0) / 2.0;
}

} // namespace udisk
