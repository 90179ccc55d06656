#pragma once

#include "udisk/geometry.hpp"
#include "udisk/graph.hpp"

#include <map>
#include <string>

namespace udisk {

/// A generated gadget: graph, named port vertices (ladder end columns,
/// connector hubs), and the intended disk layout that realizes it.
struct GadgetGraph {
    Graph graph;
    std::map<std::string, int> ports;
    DiskLayout intended;
};

enum class GadgetVariant { Outerplanar, Tree };

/// Ladder L_k: outer and inner rails of k pairwise connected vertices plus
/// degree-1 extension neighbors making the outer degrees alternate 4, 5, ...
/// starting with 4. Requires k >= 2.
GadgetGraph ladder(int k);

/// Joins ladder A's last column to ladder B's first column: an inner-inner
/// edge plus a hub vertex adjacent to both outer endpoints, carrying three
/// extension neighbors. The intended layout realizes a reflex angle > 4*pi/3
/// at the hub. turn = +1 bends left of A's heading, -1 right.
GadgetGraph corner_connector(const GadgetGraph& a, const GadgetGraph& b, int turn = 1);

/// 7-stable approximation of a rhombus of width 2k+6 and height 6*sqrt(3)+2:
/// two opposite ladders (chains plus a stabilizing chain for the tree
/// variant) joined at one end by three corner connectors. Requires k >= 2.
GadgetGraph rhombus_approx(int k, GadgetVariant variant);

/// 7-stable approximation of a regular hexagon of side length 2k-1: boundary
/// ladders/chains with corner connectors tracing the hexagon, interior filled
/// with parallel rows. Requires k = 6n + 4.
GadgetGraph hexagon_approx(int k, GadgetVariant variant);

/// Ports sidecar: one "port <name> <vertex-id>" line per port.
std::string serialize_ports(const GadgetGraph& g);

} // namespace udisk
