#pragma once

#include "udisk/geometry.hpp"

namespace udisk {

/// Sampled asymmetric Hausdorff distance from the convex polygon P to the
/// union of unit disks centered at the layout points: sup over p in P of
/// max(0, min_c dist(p, c) - 1). Samples the boundary and a column scanline
/// grid of pitch `step`, then adds step * sqrt(2)/2 so the returned value
/// over-approximates the true supremum.
double hausdorff_to_union(const ConvexPolygon& polygon, const DiskLayout& layout, double step);

} // namespace udisk
