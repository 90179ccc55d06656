#pragma once

#include "udisk/graph.hpp"

#include <vector>

namespace udisk {

enum class TreeKind { NotTree, Caterpillar, Lobster, OtherTree };

struct ChildDesc {
    int child = -1;
    std::vector<int> grandchildren; // sorted; empty for caterpillar children
};

struct VertexDescendants {
    int vertex = -1;
    std::vector<ChildDesc> children; // sorted by child id
};

/// Classification result. The backbone is the path left after deleting all
/// leaves (twice for lobsters), ordered from the lowest-id endpoint.
/// Degenerate trees (K_1, K_2, stars) get a single-vertex backbone.
/// Caterpillars are never reported as Lobster: the most specific class wins.
struct TreeClass {
    TreeKind kind = TreeKind::NotTree;
    std::vector<int> backbone;
    std::vector<VertexDescendants> descendants; // aligned with backbone
};

TreeClass classify_tree(const Graph& g);

/// Per-backbone-vertex descendant structure: children are the non-backbone
/// neighbors, grandchildren their remaining neighbors. Requires kind in
/// {Caterpillar, Lobster}.
std::vector<VertexDescendants> backbone_descendants(const Graph& g, const TreeClass& tc);

const char* tree_kind_name(TreeKind k);

} // namespace udisk
