#pragma once

#include "udisk/geometry.hpp"
#include "udisk/graph.hpp"
#include "udisk/tree.hpp"

#include <array>

namespace udisk {

enum class UdrAnswer { Yes, No };

enum class UdrNoReason { None, DegreeAtLeastSix, AdjacentDegreeFiveBackbonePair };

struct UdrDecision {
    UdrAnswer answer = UdrAnswer::No;
    UdrNoReason reason = UdrNoReason::None;
    std::array<int, 2> offending{-1, -1}; // vertex (deg >= 6) or backbone pair
};

/// Tuning knobs for the constructive layout.
struct ConstructionParams {
    /// Base angular offset between consecutive same-side leaves. 0 selects
    /// the default pi / (64 (n + 2)), which keeps the accumulated offsets
    /// small for any finite caterpillar.
    double epsilon = 0;
    /// Shift denominator for the near-stacked leaf after a degree-5 vertex
    /// (the paper's "large constant C").
    double shift_denominator = 16;
    /// Backbone overlap margin: adjacent contacts placed at distance
    /// 2 - overlap_margin. NaN selects the default epsilon / 100.
    double overlap_margin = -1;
};

/// Linear-time decision: a caterpillar admits a UDR iff it has no vertex of
/// degree >= 6 and no two adjacent degree-5 vertices on the backbone.
/// Requires classify_tree(g).kind == Caterpillar.
UdrDecision recognize_caterpillar(const Graph& g, const TreeClass& tc);
UdrDecision recognize_caterpillar(const Graph& g);

/// Constructs a DiskLayout witnessing a Yes instance. The layout passes
/// verify_udr with the default tolerance. Throws std::invalid_argument on a
/// No instance.
DiskLayout construct_caterpillar_udr(const Graph& g, const TreeClass& tc,
                                     const ConstructionParams& params = {});
DiskLayout construct_caterpillar_udr(const Graph& g, const ConstructionParams& params = {});

const char* udr_no_reason_name(UdrNoReason r);

} // namespace udisk
