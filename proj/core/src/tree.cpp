#include "udisk/tree.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace udisk {

namespace {

bool connected(const Graph& g) {
    if (g.n == 0) return false;
    std::vector<char> seen(g.n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++cnt;
                q.push(v);
            }
    }
    return cnt == g.n;
}

// Orders the vertices of `members` (which induce a path in g, restricted to
// `members`) from the lowest-id endpoint. `in_set` marks membership.
std::vector<int> order_path(const Graph& g, const std::vector<int>& members,
                            const std::vector<char>& in_set) {
    if (members.size() == 1) return members;
    auto set_degree = [&](int v) {
        int d = 0;
        for (int u : g.adj[v])
            if (in_set[u]) ++d;
        return d;
    };
    int start = -1;
    for (int v : members)
        if (set_degree(v) <= 1 && (start == -1 || v < start)) start = v;
    std::vector<int> order;
    order.reserve(members.size());
    int prev = -1, cur = start;
    while (cur != -1) {
        order.push_back(cur);
        int next = -1;
        for (int u : g.adj[cur])
            if (in_set[u] && u != prev) {
                next = u;
                break;
            }
        prev = order.back();
        cur = next;
        if (order.size() > members.size()) break; // defensive: not a path
    }
    return order;
}

// True iff the members induce a path (all induced degrees <= 2; the induced
// subgraph of internal vertices of a tree is always connected).
bool induces_path(const Graph& g, const std::vector<int>& members, const std::vector<char>& in_set) {
    for (int v : members) {
        int d = 0;
        for (int u : g.adj[v])
            if (in_set[u]) ++d;
        if (d > 2) return false;
    }
    return true;
}

} // namespace

std::vector<VertexDescendants> backbone_descendants(const Graph& g, const TreeClass& tc) {
    if (tc.kind != TreeKind::Caterpillar && tc.kind != TreeKind::Lobster)
        throw std::invalid_argument("backbone_descendants: graph is not a caterpillar or lobster");
    std::vector<char> on_backbone(g.n, 0);
    for (int v : tc.backbone) on_backbone[v] = 1;

    std::vector<VertexDescendants> out;
    out.reserve(tc.backbone.size());
    for (int v : tc.backbone) {
        VertexDescendants d;
        d.vertex = v;
        for (int c : g.adj[v]) {
            if (on_backbone[c]) continue;
            ChildDesc cd;
            cd.child = c;
            for (int gc : g.adj[c])
                if (gc != v) cd.grandchildren.push_back(gc);
            d.children.push_back(std::move(cd));
        }
        out.push_back(std::move(d));
    }
    return out;
}

TreeClass classify_tree(const Graph& g) {
    TreeClass tc;
    if (g.n == 0 || g.edge_count() != g.n - 1 || !connected(g)) return tc; // NotTree

    if (g.n == 1) {
        tc.kind = TreeKind::Caterpillar;
        tc.backbone = {0};
        tc.descendants = backbone_descendants(g, tc);
        return tc;
    }

    // First leaf deletion: vertices of degree >= 2.
    std::vector<int> core1;
    std::vector<char> in1(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) >= 2) {
            core1.push_back(v);
            in1[v] = 1;
        }

    if (core1.empty()) { // K_2
        tc.kind = TreeKind::Caterpillar;
        tc.backbone = {0};
        tc.descendants = backbone_descendants(g, tc);
        return tc;
    }

    if (induces_path(g, core1, in1)) {
        tc.kind = TreeKind::Caterpillar;
        tc.backbone = order_path(g, core1, in1);
        tc.descendants = backbone_descendants(g, tc);
        return tc;
    }

    // Second leaf deletion, within core1.
    std::vector<int> core2;
    std::vector<char> in2(g.n, 0);
    for (int v : core1) {
        int d = 0;
        for (int u : g.adj[v])
            if (in1[u]) ++d;
        if (d >= 2) {
            core2.push_back(v);
            in2[v] = 1;
        }
    }

    if (!core2.empty() && induces_path(g, core2, in2)) {
        tc.kind = TreeKind::Lobster;
        tc.backbone = order_path(g, core2, in2);
        tc.descendants = backbone_descendants(g, tc);
        return tc;
    }

    tc.kind = TreeKind::OtherTree;
    return tc;
}

const char* tree_kind_name(TreeKind k) {
    switch (k) {
    case TreeKind::NotTree: return "not-a-tree";
    case TreeKind::Caterpillar: return "caterpillar";
    case TreeKind::Lobster: return "lobster";
    case TreeKind::OtherTree: return "other-tree";
    }
    return "?";
}

} // namespace udisk
