#pragma once

#include "udisk/geometry.hpp"
#include "udisk/graph.hpp"

#include <vector>

namespace udisk {

enum class ViolationKind {
    MissingIntersection,   // edge whose disks do not intersect
    ForbiddenIntersection, // non-edge whose disks intersect (UDR model)
    OverlapInContactModel, // two disks on the same grid cell (weak UDC model)
};

struct Violation {
    int u = -1, v = -1;
    ViolationKind kind{};
    double distance = 0;
};

struct VerifyResult {
    bool ok = true;
    std::vector<Violation> violations;
};

/// Closed-disk UDR semantics with a single symmetric threshold:
/// edge uv requires dist <= 2 + tau, non-edge requires dist > 2 + tau.
/// The layout must be total on V(g).
VerifyResult verify_udr(const Graph& g, const DiskLayout& layout, double tau = 1e-9);

/// Weak UDC on the triangular grid: the layout must be injective and every
/// edge must join grid-adjacent cells. Contact between non-adjacent disks is
/// permitted. All arithmetic is exact.
VerifyResult verify_weak_udc_grid(const Graph& g, const GridLayout& layout);

const char* violation_kind_name(ViolationKind k);

} // namespace udisk
