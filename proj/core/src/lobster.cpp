#include "udisk/lobster.hpp"

#include "json.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <deque>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace udisk {

namespace {

constexpr std::array<GridCoord, 6> kAll6{GridCoord{1, 0},  GridCoord{0, 1}, GridCoord{-1, 1},
                                         GridCoord{-1, 0}, GridCoord{0, -1}, GridCoord{1, -1}};

std::uint64_t fnv1a64(const void* data, size_t len, std::uint64_t h = 1469598103934665603ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

} // namespace

DescendantSpec gamma_of(const Graph& g, const TreeClass& tc, int backbone_vertex) {
    if (tc.kind != TreeKind::Caterpillar && tc.kind != TreeKind::Lobster)
        throw std::invalid_argument("gamma_of: graph is not a caterpillar or lobster");
    auto it = std::find(tc.backbone.begin(), tc.backbone.end(), backbone_vertex);
    if (it == tc.backbone.end()) throw std::invalid_argument("gamma_of: vertex is not on the backbone");
    std::vector<char> on_bb(g.n, 0);
    for (int v : tc.backbone) on_bb[v] = 1;
    DescendantSpec spec;
    for (int u : g.adj[backbone_vertex])
        if (!on_bb[u]) spec.push_back(g.degree(u));
    std::sort(spec.begin(), spec.end(), std::greater<int>());
    return spec;
}

// ---------------------------------------------------------------------------
// Window
// ---------------------------------------------------------------------------

Window::Window(int ex_max, int db_max) : ex_max_(ex_max), db_max_(db_max) {
    for (int b = -db_max; b <= db_max; ++b)
        for (int a = -(ex_max + db_max); a <= ex_max + db_max; ++a) {
            GridCoord c{a, b};
            if (std::abs(c.euclid_x()) <= ex_max) cells_.push_back(c);
        }
    if (cells_.size() > 62) throw std::invalid_argument("Window: too many cells for a 64-bit mask");

    lo_a_ = hi_a_ = 0;
    lo_b_ = -db_max;
    hi_b_ = db_max;
    for (GridCoord c : cells_) {
        lo_a_ = std::min(lo_a_, c.a);
        hi_a_ = std::max(hi_a_, c.a);
    }
    index_table_.assign(static_cast<size_t>(hi_a_ - lo_a_ + 1) * (hi_b_ - lo_b_ + 1), -1);
    for (size_t i = 0; i < cells_.size(); ++i) {
        GridCoord c = cells_[i];
        index_table_[static_cast<size_t>(c.b - lo_b_) * (hi_a_ - lo_a_ + 1) + (c.a - lo_a_)] =
            static_cast<std::int8_t>(i);
    }
    head_bit_ = 1ULL << index_of(GridCoord{0, 0});

    reflect_map_.resize(cells_.size());
    relevant_mask_ = 0;
    for (size_t i = 0; i < cells_.size(); ++i) {
        reflect_map_[i] = static_cast<std::int8_t>(index_of(grid_reflect_x(cells_[i])));
        // A strictly forward spine advances Euclidean x by at least 1 per step
        // and descendants reach at most 4 back, so cells at x-offset <= -4 can
        // never collide with anything placed later.
        if (cells_[i].euclid_x() > -4) relevant_mask_ |= 1ULL << i;
    }
}

const Window& Window::standard() {
    static const Window w(4, 4);
    return w;
}

int Window::index_of(GridCoord c) const {
    if (c.a < lo_a_ || c.a > hi_a_ || c.b < lo_b_ || c.b > hi_b_) return -1;
    return index_table_[static_cast<size_t>(c.b - lo_b_) * (hi_a_ - lo_a_ + 1) + (c.a - lo_a_)];
}

bool Window::occupied(std::uint64_t mask, GridCoord c) const {
    int i = index_of(c);
    return i >= 0 && (mask >> i) & 1;
}

std::uint64_t Window::set(std::uint64_t mask, GridCoord c) const {
    int i = index_of(c);
    return i >= 0 ? (mask | (1ULL << i)) : mask;
}

std::uint64_t Window::shift(std::uint64_t mask, GridCoord dir) const {
    std::uint64_t out = 0;
    while (mask) {
        int i = std::countr_zero(mask);
        mask &= mask - 1;
        int j = index_of(cells_[i] - dir);
        if (j >= 0) out |= 1ULL << j;
    }
    return out;
}

std::uint64_t Window::reflect(std::uint64_t mask) const {
    std::uint64_t out = 0;
    while (mask) {
        int i = std::countr_zero(mask);
        mask &= mask - 1;
        out |= 1ULL << reflect_map_[i];
    }
    return out;
}

std::uint64_t Window::trim_irrelevant(std::uint64_t mask) const { return mask & relevant_mask_; }

namespace {

std::uint8_t reflect_indir(std::uint8_t d) { return d == 2 ? 3 : d == 3 ? std::uint8_t{2} : d; }

std::uint64_t sig_key(const DpSignature& s) { return (s.mask << 2) | s.indir; }

} // namespace

DpSignature canonical_signature(const Window& w, DpSignature s) {
    DpSignature r{w.reflect(s.mask), reflect_indir(s.indir)};
    if (std::pair(r.indir, r.mask) < std::pair(s.indir, s.mask)) return r;
    return s;
}

// ---------------------------------------------------------------------------
// Shared placement enumeration
// ---------------------------------------------------------------------------

namespace {

// Occupancy oracle for one transition: window bits plus the cells placed so
// far during the transition. Cells outside the window are free (nothing
// reachable can live there).
struct LocalOcc {
    const Window* w;
    std::uint64_t mask;
    std::vector<GridCoord> extra;

    bool occupied_at(GridCoord c) const {
        if (w->occupied(mask, c)) return true;
        for (GridCoord e : extra)
            if (e == c) return true;
        return false;
    }
    void push(GridCoord c) { extra.push_back(c); }
    void pop() { extra.pop_back(); }
};

// Enumerates k-subsets of items in lexicographic order. fn returns true to stop.
bool for_each_combination(const std::vector<GridCoord>& items, int k,
                          const std::function<bool(const std::vector<GridCoord>&)>& fn) {
    std::vector<GridCoord> combo;
    std::function<bool(int)> rec = [&](int start) -> bool {
        if (static_cast<int>(combo.size()) == k) return fn(combo);
        for (int i = start; i <= static_cast<int>(items.size()) - (k - static_cast<int>(combo.size()));
             ++i) {
            combo.push_back(items[i]);
            if (rec(i + 1)) return true;
            combo.pop_back();
        }
        return false;
    };
    return rec(0);
}

// Places children of degrees gamma[j..] adjacent to `head`, each with its
// grandchildren adjacent to it. Children with equal degree are produced in
// increasing neighbor order so interchangeable assignments appear once.
// fn returns true to stop the enumeration.
bool for_each_forest(LocalOcc& occ, GridCoord head, const DescendantSpec& gamma, size_t j,
                     int min_idx, std::vector<GridCoord>& children,
                     std::vector<std::vector<GridCoord>>& grands,
                     const std::function<bool()>& fn) {
    if (j == gamma.size()) return fn();
    auto nbrs = grid_neighbors(head);
    int start = (j > 0 && gamma[j] == gamma[j - 1]) ? min_idx + 1 : 0;
    for (int idx = start; idx < 6; ++idx) {
        GridCoord cell = nbrs[idx];
        if (occ.occupied_at(cell)) continue;
        occ.push(cell);
        children.push_back(cell);

        int need = gamma[j] - 1;
        bool stop = false;
        if (need == 0) {
            grands.emplace_back();
            stop = for_each_forest(occ, head, gamma, j + 1, idx, children, grands, fn);
            grands.pop_back();
        } else {
            std::vector<GridCoord> free;
            for (GridCoord fc : grid_neighbors(cell))
                if (!occ.occupied_at(fc)) free.push_back(fc);
            if (static_cast<int>(free.size()) >= need) {
                stop = for_each_combination(free, need, [&](const std::vector<GridCoord>& combo) {
                    for (GridCoord gc : combo) occ.push(gc);
                    grands.push_back(combo);
                    bool s = for_each_forest(occ, head, gamma, j + 1, idx, children, grands, fn);
                    grands.pop_back();
                    for (size_t t = 0; t < combo.size(); ++t) occ.pop();
                    return s;
                });
            }
        }
        children.pop_back();
        occ.pop();
        if (stop) return true;
    }
    return false;
}

// One DP transition: choose the next spine cell (from dirs, or none when
// dirs is empty) and then place the current vertex's descendants around
// `head` = (0,0). fn(dir_index, children, grands) returns true to stop.
bool for_each_transition(
    const Window& w, std::uint64_t mask, const DescendantSpec& gamma,
    std::span<const GridCoord> dirs,
    const std::function<bool(int, const std::vector<GridCoord>&,
                             const std::vector<std::vector<GridCoord>>&)>& fn) {
    LocalOcc occ{&w, mask, {}};
    std::vector<GridCoord> children;
    std::vector<std::vector<GridCoord>> grands;
    if (dirs.empty()) {
        return for_each_forest(occ, GridCoord{0, 0}, gamma, 0, -1, children, grands,
                               [&]() { return fn(-1, children, grands); });
    }
    for (size_t di = 0; di < dirs.size(); ++di) {
        GridCoord step = dirs[di];
        if (occ.occupied_at(step)) continue;
        occ.push(step);
        bool stop = for_each_forest(occ, GridCoord{0, 0}, gamma, 0, -1, children, grands,
                                    [&]() { return fn(static_cast<int>(di), children, grands); });
        occ.pop();
        if (stop) return true;
    }
    return false;
}

// Existence of a placement of `gamma` around `new_head` (which is itself
// occupied by the new spine disk) given window occupancy `mask`.
bool placement_exists(const Window& w, std::uint64_t mask, GridCoord new_head,
                      const DescendantSpec& gamma) {
    LocalOcc occ{&w, mask, {new_head}};
    std::vector<GridCoord> children;
    std::vector<std::vector<GridCoord>> grands;
    return for_each_forest(occ, new_head, gamma, 0, -1, children, grands, []() { return true; });
}

} // namespace

// ---------------------------------------------------------------------------
// enumerate_placements
// ---------------------------------------------------------------------------

namespace {

std::vector<int> placement_key(const Placement& p) {
    std::vector<int> key{p.dir, p.spine_step.a, p.spine_step.b};
    for (size_t i = 0; i < p.child_cells.size(); ++i) {
        key.push_back(p.child_cells[i].a);
        key.push_back(p.child_cells[i].b);
        for (GridCoord gc : p.grandchild_cells[i]) {
            key.push_back(gc.a);
            key.push_back(gc.b);
        }
    }
    return key;
}

int neighbor_index(GridCoord head, GridCoord cell) {
    auto nbrs = grid_neighbors(head);
    for (int i = 0; i < 6; ++i)
        if (nbrs[i] == cell) return i;
    return -1;
}

Placement reflect_placement(const Placement& p, PlacementMode mode, const DescendantSpec& gamma) {
    Placement r;
    r.spine_step = grid_reflect_x(p.spine_step);
    if (p.dir < 0) {
        r.dir = -1;
    } else if (mode == PlacementMode::Forward3) {
        static constexpr int map3[3] = {0, 2, 1};
        r.dir = map3[p.dir];
    } else {
        static constexpr int map6[6] = {0, 5, 4, 3, 2, 1};
        r.dir = map6[p.dir];
    }
    r.child_cells.reserve(p.child_cells.size());
    r.grandchild_cells.reserve(p.child_cells.size());
    for (size_t i = 0; i < p.child_cells.size(); ++i) {
        r.child_cells.push_back(grid_reflect_x(p.child_cells[i]));
        std::vector<GridCoord> g;
        for (GridCoord gc : p.grandchild_cells[i]) g.push_back(grid_reflect_x(gc));
        r.grandchild_cells.push_back(std::move(g));
    }
    // Restore canonical ordering: equal-degree children ascending by neighbor
    // index, grandchildren ascending within each child.
    for (size_t i = 0; i < r.child_cells.size(); ++i) {
        auto& g = r.grandchild_cells[i];
        std::sort(g.begin(), g.end(), [&](GridCoord x, GridCoord y) {
            return neighbor_index(r.child_cells[i], x) < neighbor_index(r.child_cells[i], y);
        });
    }
    size_t i = 0;
    while (i < r.child_cells.size()) {
        size_t j = i;
        while (j < r.child_cells.size() && gamma[j] == gamma[i]) ++j;
        std::vector<size_t> order(j - i);
        for (size_t t = 0; t < order.size(); ++t) order[t] = i + t;
        std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
            return neighbor_index({0, 0}, r.child_cells[x]) < neighbor_index({0, 0}, r.child_cells[y]);
        });
        std::vector<GridCoord> cc(j - i);
        std::vector<std::vector<GridCoord>> gg(j - i);
        for (size_t t = 0; t < order.size(); ++t) {
            cc[t] = r.child_cells[order[t]];
            gg[t] = r.grandchild_cells[order[t]];
        }
        for (size_t t = 0; t < order.size(); ++t) {
            r.child_cells[i + t] = cc[t];
            r.grandchild_cells[i + t] = std::move(gg[t]);
        }
        i = j;
    }
    return r;
}

} // namespace

std::vector<Placement> enumerate_placements(const DpSignature& sig, const DescendantSpec& gamma,
                                            PlacementMode mode, const Window& w) {
    std::span<const GridCoord> dirs = (mode == PlacementMode::Forward3)
                                          ? std::span<const GridCoord>(kForward3)
                                          : std::span<const GridCoord>(kAll6);
    bool symmetric = (w.reflect(sig.mask) == sig.mask) && (reflect_indir(sig.indir) == sig.indir);

    std::vector<Placement> out;
    for_each_transition(w, sig.mask, gamma, dirs,
                        [&](int di, const std::vector<GridCoord>& ch,
                            const std::vector<std::vector<GridCoord>>& gr) {
                            Placement p;
                            p.dir = di;
                            p.spine_step = di >= 0 ? dirs[di] : GridCoord{0, 0};
                            p.child_cells = ch;
                            p.grandchild_cells = gr;
                            if (symmetric) {
                                Placement refl = reflect_placement(p, mode, gamma);
                                if (placement_key(refl) < placement_key(p)) return false; // orbit twin
                            }
                            out.push_back(std::move(p));
                            return false;
                        });
    return out;
}

// ---------------------------------------------------------------------------
// dp_recognize
// ---------------------------------------------------------------------------

namespace {

struct BackboneData {
    std::vector<int> order;                          // backbone vertex ids
    std::vector<DescendantSpec> gamma;               // per backbone index
    std::vector<std::vector<int>> child_ids;         // aligned with gamma
    std::vector<std::vector<std::vector<int>>> gc_ids; // grandchild ids per child
};

BackboneData backbone_data(const Graph& g, const TreeClass& tc) {
    if (tc.kind != TreeKind::Caterpillar && tc.kind != TreeKind::Lobster)
        throw std::invalid_argument("dp_recognize: graph is not a caterpillar or lobster");
    BackboneData bd;
    bd.order = tc.backbone;
    auto desc = tc.descendants.empty() ? backbone_descendants(g, tc) : tc.descendants;
    for (const auto& vd : desc) {
        std::vector<std::pair<int, int>> kids; // (-degree, id) for sorting
        for (const auto& cd : vd.children)
            kids.push_back({-(static_cast<int>(cd.grandchildren.size()) + 1), cd.child});
        std::sort(kids.begin(), kids.end());
        DescendantSpec gamma;
        std::vector<int> cids;
        std::vector<std::vector<int>> gids;
        for (auto [negdeg, id] : kids) {
            gamma.push_back(-negdeg);
            cids.push_back(id);
            for (const auto& cd : vd.children)
                if (cd.child == id) {
                    gids.push_back(cd.grandchildren);
                    break;
                }
        }
        bd.gamma.push_back(std::move(gamma));
        bd.child_ids.push_back(std::move(cids));
        bd.gc_ids.push_back(std::move(gids));
    }
    return bd;
}

} // namespace

DpResult dp_recognize(const Graph& g, const TreeClass& tc, const Window& w) {
    BackboneData bd = backbone_data(g, tc);
    const int m = static_cast<int>(bd.order.size());

    struct Node {
        std::uint64_t mask;
        std::uint8_t indir;
        GridCoord head;
        int parent;
        std::vector<std::pair<int, GridCoord>> placed; // absolute cells
    };

    DpResult res;
    std::vector<Node> nodes;
    nodes.push_back({w.trim_irrelevant(w.head_bit()) | w.head_bit(), 0, {0, 0}, -1,
                     {{bd.order[0], GridCoord{0, 0}}}});
    std::vector<int> frontier{0};
    res.max_frontier = 1;

    int final_node = -1;
    for (int i = 0; i < m && !frontier.empty(); ++i) {
        const bool last = (i == m - 1);
        std::span<const GridCoord> dirs =
            last ? std::span<const GridCoord>() : std::span<const GridCoord>(kForward3);
        std::vector<int> next;
        std::unordered_set<std::uint64_t> seen;

        for (int ni : frontier) {
            const Node node = nodes[ni]; // copy: nodes may grow
            bool stop = for_each_transition(
                w, node.mask, bd.gamma[i], dirs,
                [&](int di, const std::vector<GridCoord>& ch,
                    const std::vector<std::vector<GridCoord>>& gr) {
                    Node nn;
                    nn.parent = ni;
                    for (size_t c = 0; c < ch.size(); ++c) {
                        nn.placed.push_back({bd.child_ids[i][c], node.head + ch[c]});
                        for (size_t t = 0; t < gr[c].size(); ++t)
                            nn.placed.push_back({bd.gc_ids[i][c][t], node.head + gr[c][t]});
                    }
                    if (last) {
                        final_node = static_cast<int>(nodes.size());
                        nodes.push_back(std::move(nn));
                        return true; // first completion wins
                    }
                    GridCoord step = kForward3[di];
                    nn.head = node.head + step;
                    nn.placed.push_back({bd.order[i + 1], nn.head});
                    std::uint64_t mask = w.shift(node.mask, step) | w.head_bit();
                    for (size_t c = 0; c < ch.size(); ++c) {
                        mask = w.set(mask, ch[c] - step);
                        for (GridCoord gc : gr[c]) mask = w.set(mask, gc - step);
                    }
                    mask = w.trim_irrelevant(mask) | w.head_bit();
                    nn.mask = mask;
                    nn.indir = static_cast<std::uint8_t>(di + 1);
                    DpSignature canon = canonical_signature(w, {mask, nn.indir});
                    if (!seen.insert(sig_key(canon)).second) return false;
                    next.push_back(static_cast<int>(nodes.size()));
                    nodes.push_back(std::move(nn));
                    return false;
                });
            if (stop) break;
        }
        if (final_node >= 0) break;
        frontier = std::move(next);
        res.max_frontier = std::max(res.max_frontier, static_cast<int>(frontier.size()));
    }

    if (final_node < 0) return res;

    res.feasible = true;
    res.witness.cells.assign(g.n, {});
    for (int cur = final_node; cur >= 0; cur = nodes[cur].parent)
        for (auto [v, c] : nodes[cur].placed) res.witness.cells[v] = c;
    return res;
}

// ---------------------------------------------------------------------------
// brute_force_enumerate
// ---------------------------------------------------------------------------

namespace {

GridCoord rot60(GridCoord c) { return {-c.b, c.a + c.b}; } // 60 degrees counterclockwise

std::vector<std::int32_t> layout_bytes(const std::vector<GridCoord>& cells) {
    std::vector<std::int32_t> out;
    out.reserve(cells.size() * 2);
    for (GridCoord c : cells) {
        out.push_back(c.a);
        out.push_back(c.b);
    }
    return out;
}

std::vector<std::int32_t> canonical_layout(const std::vector<GridCoord>& cells, bool all12) {
    std::vector<GridCoord> cur = cells;
    std::vector<std::int32_t> best;
    auto consider = [&](const std::vector<GridCoord>& v) {
        auto b = layout_bytes(v);
        if (best.empty() || b < best) best = std::move(b);
    };
    if (!all12) {
        consider(cur);
        std::vector<GridCoord> refl;
        for (GridCoord c : cur) refl.push_back(grid_reflect_x(c));
        consider(refl);
        return best;
    }
    for (int r = 0; r < 6; ++r) {
        consider(cur);
        std::vector<GridCoord> refl;
        for (GridCoord c : cur) refl.push_back(grid_reflect_x(c));
        consider(refl);
        for (auto& c : cur) c = rot60(c);
    }
    return best;
}

} // namespace

BruteForceResult brute_force_enumerate(const Graph& g, const TreeClass& tc, int bound_halfwidth,
                                       bool count_all) {
    BackboneData bd = backbone_data(g, tc);
    const int m = static_cast<int>(bd.order.size());

    std::vector<GridCoord> cell_of(g.n, {0, 0});
    std::set<std::pair<int, int>> occ;
    std::set<std::vector<std::int32_t>> layouts;
    bool done = false;

    auto occupied = [&](GridCoord c) { return occ.count({c.a, c.b}) > 0; };
    auto place = [&](int v, GridCoord c) {
        if (grid_norm(c) > bound_halfwidth) throw BoundsExceeded(bound_halfwidth);
        occ.insert({c.a, c.b});
        cell_of[v] = c;
    };
    auto unplace = [&](GridCoord c) { occ.erase({c.a, c.b}); };

    // Forest placement for descendants of backbone index i, then continue.
    std::function<void(int)> spine_step;
    std::function<void(int, size_t, int, const std::function<void()>&)> forest;

    forest = [&](int i, size_t j, int min_idx, const std::function<void()>& cont) {
        if (done) return;
        if (j == bd.gamma[i].size()) {
            cont();
            return;
        }
        GridCoord head = cell_of[bd.order[i]];
        auto nbrs = grid_neighbors(head);
        int start = (j > 0 && bd.gamma[i][j] == bd.gamma[i][j - 1]) ? min_idx + 1 : 0;
        for (int idx = start; idx < 6 && !done; ++idx) {
            GridCoord cell = nbrs[idx];
            if (occupied(cell)) continue;
            place(bd.child_ids[i][j], cell);
            int need = bd.gamma[i][j] - 1;
            if (need == 0) {
                forest(i, j + 1, idx, cont);
            } else {
                std::vector<GridCoord> free;
                for (GridCoord fc : grid_neighbors(cell))
                    if (!occupied(fc)) free.push_back(fc);
                if (static_cast<int>(free.size()) >= need) {
                    for_each_combination(free, need, [&](const std::vector<GridCoord>& combo) {
                        for (size_t t = 0; t < combo.size(); ++t)
                            place(bd.gc_ids[i][j][t], combo[t]);
                        forest(i, j + 1, idx, cont);
                        for (GridCoord gc : combo) unplace(gc);
                        return done;
                    });
                }
            }
            unplace(cell);
        }
    };

    spine_step = [&](int i) {
        if (done) return;
        if (i == m - 1) {
            forest(i, 0, -1, [&]() {
                layouts.insert(canonical_layout(cell_of, m == 1));
                if (!count_all) done = true;
            });
            return;
        }
        GridCoord head = cell_of[bd.order[i]];
        if (i == 0) {
            GridCoord cand{1, 0}; // second backbone cell pinned to one orbit representative
            if (!occupied(cand)) {
                place(bd.order[i + 1], cand);
                forest(i, 0, -1, [&]() { spine_step(i + 1); });
                unplace(cand);
            }
            return;
        }
        for (GridCoord dir : kAll6) {
            if (done) break;
            GridCoord cand = head + dir;
            if (occupied(cand)) continue;
            place(bd.order[i + 1], cand);
            forest(i, 0, -1, [&]() { spine_step(i + 1); });
            unplace(cand);
        }
    };

    place(bd.order[0], {0, 0});
    spine_step(0);

    BruteForceResult res;
    res.count = static_cast<long long>(layouts.size());
    res.feasible = res.count > 0;
    for (const auto& key : layouts) {
        GridLayout l;
        for (size_t i = 0; i + 1 < key.size() + 1; i += 2) l.cells.push_back({key[i], key[i + 1]});
        res.witnesses.push_back(std::move(l));
    }
    return res;
}

// ---------------------------------------------------------------------------
// induction_case_report
// ---------------------------------------------------------------------------

namespace {

// Local ball-2 universe around a prospective head: 6 ring-1 cells (neighbor
// order) then 12 ring-2 cells; used to enumerate distinct descendant
// footprints once per local occupancy pattern.
struct Ball2 {
    std::array<GridCoord, 18> cells{};
    std::array<std::vector<int>, 6> child_nbrs; // local indices adjacent to ring-1 cell i

    Ball2() {
        auto n1 = grid_neighbors(GridCoord{0, 0});
        int k = 0;
        for (GridCoord c : n1) cells[k++] = c;
        for (int b = -2; b <= 2; ++b)
            for (int a = -4; a <= 4; ++a) {
                GridCoord c{a, b};
                if (grid_norm(c) == 2) cells[k++] = c;
            }
        for (int i = 0; i < 6; ++i)
            for (GridCoord nb : grid_neighbors(cells[i])) {
                if (nb == GridCoord{0, 0}) continue;
                for (int t = 0; t < 18; ++t)
                    if (cells[t] == nb) {
                        child_nbrs[i].push_back(t);
                        break;
                    }
            }
    }
};

const Ball2& ball2() {
    static const Ball2 b;
    return b;
}

// All distinct cell-set footprints of a child/grandchild forest around an
// (implicitly occupied) head, given the 18-bit occupancy of its ball-2
// neighborhood. Bit i of a footprint = local cell i used.
void enum_footprints(std::uint32_t occ, int child_cap, std::vector<std::uint32_t>& out) {
    const Ball2& b = ball2();
    std::unordered_set<std::uint32_t> seen;
    std::function<void(std::uint32_t, int, int, std::uint32_t)> rec =
        [&](std::uint32_t o, int cap, int min_child, std::uint32_t acc) {
            seen.insert(acc);
            if (cap == 0) return;
            for (int i = min_child + 1; i < 6; ++i) {
                if ((o >> i) & 1) continue;
                std::uint32_t o1 = o | (1u << i);
                std::uint32_t acc1 = acc | (1u << i);
                // grandchild candidates: free ball-2 neighbors of cell i
                std::vector<int> cand;
                for (int t : b.child_nbrs[i])
                    if (!((o1 >> t) & 1)) cand.push_back(t);
                int nc = static_cast<int>(cand.size());
                for (std::uint32_t sub = 0; sub < (1u << nc); ++sub) {
                    if (std::popcount(sub) > 5) continue; // child degree <= 6
                    std::uint32_t bits = 0;
                    for (int t = 0; t < nc; ++t)
                        if ((sub >> t) & 1) bits |= 1u << cand[t];
                    rec(o1 | bits, cap - 1, i, acc1 | bits);
                }
            }
        };
    rec(occ, child_cap, -1, 0);
    out.assign(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
}

struct FootprintCache {
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> map;

    const std::vector<std::uint32_t>& get(std::uint32_t occ, int cap) {
        std::uint64_t key = (static_cast<std::uint64_t>(cap) << 18) | occ;
        auto it = map.find(key);
        if (it != map.end()) return it->second;
        std::vector<std::uint32_t> v;
        enum_footprints(occ, cap, v);
        return map.emplace(key, std::move(v)).first->second;
    }
};

std::vector<DescendantSpec> all_gammas(int max_children) {
    std::vector<DescendantSpec> out;
    DescendantSpec cur;
    std::function<void(int)> rec = [&](int max_deg) {
        out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_children) return;
        for (int d = std::min(6, max_deg); d >= 1; --d) {
            cur.push_back(d);
            rec(d);
            cur.pop_back();
        }
    };
    rec(6);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

InductionReport induction_case_report(const Window& w, int jobs) {
    InductionReport rep;
    rep.ex_max = w.ex_max();
    rep.db_max = w.db_max();

    const Ball2& b2 = ball2();
    FootprintCache cache;

    auto gather_pattern = [&](std::uint64_t mask, GridCoord center) {
        std::uint32_t p = 0;
        for (int t = 0; t < 18; ++t)
            if (w.occupied(mask, center + b2.cells[t])) p |= 1u << t;
        return p;
    };

    // Closure over canonical states reachable by strictly x-monotone
    // extensions, each state covering the head and its placed descendants.
    std::unordered_set<std::uint64_t> visited;
    std::vector<DpSignature> states;
    std::deque<DpSignature> queue;

    auto submit = [&](std::uint64_t mask, std::uint8_t indir) {
        DpSignature s = canonical_signature(w, {w.trim_irrelevant(mask) | w.head_bit(), indir});
        if (visited.insert(sig_key(s)).second) {
            states.push_back(s);
            queue.push_back(s);
        }
    };

    // Seeds: a first backbone vertex (up to 5 children) on an empty board.
    {
        std::uint64_t mask0 = w.head_bit();
        std::uint32_t pattern = gather_pattern(mask0, {0, 0});
        for (std::uint32_t fp : cache.get(pattern, 5)) {
            std::uint64_t mask = mask0;
            for (int t = 0; t < 18; ++t)
                if ((fp >> t) & 1) mask = w.set(mask, b2.cells[t]);
            submit(mask, 0);
        }
    }

    while (!queue.empty()) {
        DpSignature s = queue.front();
        queue.pop_front();
        for (int di = 0; di < 3; ++di) {
            GridCoord step = kForward3[di];
            if (w.occupied(s.mask, step)) continue;
            std::uint32_t pattern = gather_pattern(s.mask, step);
            std::uint64_t base = w.shift(s.mask, step) | w.head_bit();
            for (std::uint32_t fp : cache.get(pattern, 4)) { // interior vertex: <= 4 children
                std::uint64_t mask = base;
                for (int t = 0; t < 18; ++t)
                    if ((fp >> t) & 1) mask = w.set(mask, b2.cells[t]);
                submit(mask, static_cast<std::uint8_t>(di + 1));
            }
        }
    }
    rep.theta_reachable = static_cast<long long>(states.size());

    // Project each reachable pattern onto the cells a new placement can touch
    // (within grid distance 3 of the head); the check is exact on this window.
    std::uint64_t proj_mask = 0;
    for (int i = 0; i < w.bits(); ++i)
        if (grid_norm(w.cells()[i]) <= 3) proj_mask |= 1ULL << i;

    std::unordered_set<std::uint64_t> theta_set;
    for (const DpSignature& s : states) {
        bool fwd_free = false;
        for (GridCoord step : kForward3)
            if (!w.occupied(s.mask, step)) fwd_free = true;
        if (!fwd_free) {
            ++rep.theta_dead_end;
            continue; // no x-monotone extension exists in this pattern
        }
        std::uint64_t p = s.mask & proj_mask;
        theta_set.insert(std::min(p, w.reflect(p)));
    }
    std::vector<std::uint64_t> thetas(theta_set.begin(), theta_set.end());
    std::sort(thetas.begin(), thetas.end());
    rep.theta_projected = static_cast<long long>(thetas.size());

    const std::vector<DescendantSpec> gammas = all_gammas(5);
    rep.gamma_count = static_cast<long long>(gammas.size());
    rep.cases = rep.theta_projected * rep.gamma_count;

    struct Tally {
        long long r6 = 0, r3 = 0;
        std::vector<InductionCounterexample> cex;
    };
    auto run_chunk = [&](size_t lo, size_t hi) {
        Tally t;
        for (size_t ti = lo; ti < hi; ++ti) {
            std::uint64_t theta = thetas[ti];
            for (const DescendantSpec& gamma : gammas) {
                bool r3 = false, r6 = false;
                for (GridCoord step : kForward3) {
                    if (w.occupied(theta, step)) continue;
                    if (placement_exists(w, theta, step, gamma)) {
                        r3 = true;
                        break;
                    }
                }
                for (GridCoord step : kAll6) {
                    if (w.occupied(theta, step)) continue;
                    if (placement_exists(w, theta, step, gamma)) {
                        r6 = true;
                        break;
                    }
                }
                if (r6) ++t.r6;
                if (r3) ++t.r3;
                if (r6 && !r3) {
                    InductionCounterexample c;
                    c.theta = theta;
                    c.gamma = gamma;
                    std::uint64_t h = fnv1a64(&theta, sizeof theta);
                    std::uint8_t len = static_cast<std::uint8_t>(gamma.size());
                    h = fnv1a64(&len, 1, h);
                    for (int d : gamma) {
                        std::uint8_t dd = static_cast<std::uint8_t>(d);
                        h = fnv1a64(&dd, 1, h);
                    }
                    c.case_id = hex64(h);
                    t.cex.push_back(std::move(c));
                }
            }
        }
        return t;
    };

    jobs = std::max(1, jobs);
    std::vector<Tally> tallies;
    if (jobs == 1) {
        tallies.push_back(run_chunk(0, thetas.size()));
    } else {
        std::vector<std::future<Tally>> futs;
        size_t chunk = (thetas.size() + jobs - 1) / jobs;
        for (size_t lo = 0; lo < thetas.size(); lo += chunk)
            futs.push_back(std::async(std::launch::async, run_chunk, lo,
                                      std::min(lo + chunk, thetas.size())));
        for (auto& f : futs) tallies.push_back(f.get());
    }
    for (auto& t : tallies) {
        rep.realizable6 += t.r6;
        rep.realizable3 += t.r3;
        for (auto& c : t.cex) rep.counterexamples.push_back(std::move(c));
    }
    std::sort(rep.counterexamples.begin(), rep.counterexamples.end(),
              [](const auto& a, const auto& b) { return a.case_id < b.case_id; });
    return rep;
}

std::string InductionReport::to_json() const {
    nlohmann::ordered_json j;
    j["window"] = {{"ex_max", ex_max}, {"db_max", db_max}};
    j["gamma_count"] = gamma_count;
    j["theta_reachable"] = theta_reachable;
    j["theta_dead_end"] = theta_dead_end;
    j["theta_projected"] = theta_projected;
    j["cases"] = cases;
    j["realizable6"] = realizable6;
    j["realizable3"] = realizable3;
    j["counterexample_count"] = counterexamples.size();
    j["counterexamples"] = nlohmann::ordered_json::array();
    for (const auto& c : counterexamples) {
        nlohmann::ordered_json e;
        e["case_id"] = c.case_id;
        e["theta"] = c.theta;
        e["gamma"] = c.gamma;
        j["counterexamples"].push_back(e);
    }
    return j.dump(2) + "\n";
}

std::string InductionReport::summary() const {
    std::string s;
    s += "reachable states: " + std::to_string(theta_reachable) + "\n";
    s += "dead-end states: " + std::to_string(theta_dead_end) + "\n";
    s += "projected patterns: " + std::to_string(theta_projected) + "\n";
    s += "gammas: " + std::to_string(gamma_count) + "\n";
    s += "cases: " + std::to_string(cases) + "\n";
    s += "realizable6: " + std::to_string(realizable6) + "\n";
    s += "realizable3: " + std::to_string(realizable3) + "\n";
    s += "counterexamples: " + std::to_string(counterexamples.size()) + "\n";
    return s;
}

} // namespace udisk
