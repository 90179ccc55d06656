#include "udisk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace udisk {

namespace {

std::int64_t pack_cell(int cx, int cy) {
    return (static_cast<std::int64_t>(cx) << 32) ^ (static_cast<std::int64_t>(cy) & 0xffffffffLL);
}

void sort_violations(std::vector<Violation>& v) {
    std::sort(v.begin(), v.end(), [](const Violation& a, const Violation& b) {
        return std::tie(a.u, a.v, a.kind) < std::tie(b.u, b.v, b.kind);
    });
}

} // namespace

VerifyResult verify_udr(const Graph& g, const DiskLayout& layout, double tau) {
    if (static_cast<int>(layout.centers.size()) != g.n)
        throw std::invalid_argument("verify_udr: layout is not total on V(g)");

    VerifyResult res;
    const double thr = 2.0 + tau;
    const double thr2 = thr * thr;

    // Every edge must be realized.
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) {
            if (v <= u) continue;
            double d2 = dist2(layout.centers[u], layout.centers[v]);
            if (d2 > thr2)
                res.violations.push_back({u, v, ViolationKind::MissingIntersection, std::sqrt(d2)});
        }

    // Proximity pass over a uniform grid: any non-edge pair within the
    // threshold is a forbidden intersection.
    const double cell = thr;
    std::unordered_map<std::int64_t, std::vector<int>> buckets;
    buckets.reserve(static_cast<size_t>(g.n) * 2);
    auto cell_of = [&](Point2 p) {
        return std::pair<int, int>{static_cast<int>(std::floor(p.x / cell)),
                                   static_cast<int>(std::floor(p.y / cell))};
    };
    for (int v = 0; v < g.n; ++v) {
        auto [cx, cy] = cell_of(layout.centers[v]);
        buckets[pack_cell(cx, cy)].push_back(v);
    }
    for (int u = 0; u < g.n; ++u) {
        auto [cx, cy] = cell_of(layout.centers[u]);
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy) {
                auto it = buckets.find(pack_cell(cx + dx, cy + dy));
                if (it == buckets.end()) continue;
                for (int v : it->second) {
                    if (v <= u) continue;
                    double d2 = dist2(layout.centers[u], layout.centers[v]);
                    if (d2 <= thr2 && !g.has_edge(u, v))
                        res.violations.push_back(
                            {u, v, ViolationKind::ForbiddenIntersection, std::sqrt(d2)});
                }
            }
    }

    sort_violations(res.violations);
    res.ok = res.violations.empty();
    return res;
}

VerifyResult verify_weak_udc_grid(const Graph& g, const GridLayout& layout) {
    if (static_cast<int>(layout.cells.size()) != g.n)
        throw std::invalid_argument("verify_weak_udc_grid: layout is not total on V(g)");

    VerifyResult res;

    // Injectivity: interior-disjointness is automatic on the grid except for
    // coincident cells.
    std::unordered_map<std::int64_t, std::vector<int>> by_cell;
    for (int v = 0; v < g.n; ++v) by_cell[pack_cell(layout.cells[v].a, layout.cells[v].b)].push_back(v);
    for (auto& [key, vs] : by_cell)
        for (size_t i = 0; i + 1 < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                res.violations.push_back({vs[i], vs[j], ViolationKind::OverlapInContactModel, 0.0});

    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) {
            if (v <= u) continue;
            if (!grid_adjacent(layout.cells[u], layout.cells[v]))
                res.violations.push_back({u, v, ViolationKind::MissingIntersection,
                                          std::sqrt(static_cast<double>(
                                              grid_dist2(layout.cells[u], layout.cells[v])))});
        }

    sort_violations(res.violations);
    res.ok = res.violations.empty();
    return res;
}

const char* violation_kind_name(ViolationKind k) {
    switch (k) {
    case ViolationKind::MissingIntersection: return "missing-intersection";
    case ViolationKind::ForbiddenIntersection: return "forbidden-intersection";
    case ViolationKind::OverlapInContactModel: return "overlap-in-contact-model";
    }
    return "?";
}

} // namespace udisk
