#include "udisk/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace udisk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = 1.7320508075688772;

// Layout constants. Rung overlap and per-vertex inward bend give every
// non-adjacent pair a clearance several orders of magnitude above the
// verifier tolerance; the stack radius keeps near-stacked extensions clear of
// both rail neighbors.
constexpr double kRung = 1.999;        // rung contact distance (slight overlap)
constexpr double kPendant = 1.999;     // pendant contact distance
constexpr double kBendMain = 0.02;     // per-vertex inward bend along a course
constexpr double kStackR = 0.006;      // near-stacked extension offset
constexpr double kClear = 2.0035;      // required distance between non-adjacent disks
constexpr double kSweepStep = 0.002;   // angular sweep resolution
constexpr double kApex = 109.0 * kPi / 180.0; // corner connector apex angle

double norm_angle(double a) {
    while (a <= -kPi) a += 2 * kPi;
    while (a > kPi) a -= 2 * kPi;
    return a;
}

struct Builder {
    std::vector<std::pair<int, int>> edges;
    std::vector<Point2> pos;
    std::map<std::string, int> ports;

    int add(Point2 p) {
        pos.push_back(p);
        return static_cast<int>(pos.size()) - 1;
    }
    void link(int u, int v) { edges.emplace_back(u, v); }

    GadgetGraph finish() const {
        GadgetGraph g;
        g.graph = Graph::from_edges(static_cast<int>(pos.size()), edges);
        g.ports = ports;
        g.intended.centers = pos;
        return g;
    }
};

// Deterministic pendant placement: walk the parent circle from a hint angle
// until the disk clears everything placed so far. Throws if a full turn
// finds no room (a generation bug, surfaced by the verifier tests).
int place_pendant(Builder& b, int parent, double hint, double dir) {
    Point2 pc = b.pos[parent];
    std::vector<int> near;
    for (int v = 0; v < static_cast<int>(b.pos.size()); ++v)
        if (v != parent && dist(b.pos[v], pc) < kPendant + kClear + 0.1) near.push_back(v);
    for (double swept = 0; swept <= 2 * kPi; swept += kSweepStep) {
        double ang = hint + dir * swept;
        Point2 p = pc + unit_dir(ang) * kPendant;
        bool ok = true;
        for (int v : near)
            if (dist(b.pos[v], p) < kClear) {
                ok = false;
                break;
            }
        if (ok) {
            int id = b.add(p);
            b.link(parent, id);
            return id;
        }
    }
    throw std::logic_error("place_pendant: no room on the parent circle");
}

// A run of ladder/chain columns along a gently bending course.
struct PieceCfg {
    int cols = 3;
    bool with_inner = true;
    double bend = kBendMain;        // per-vertex left (inward) turn
    double extra_bend_begin = 0;    // added at the first two vertices
    double extra_bend_end = 0;      // added at the last two vertices
    bool attach_begin = false;      // column consumed by a corner connector
    bool attach_end = false;
};

struct Piece {
    PieceCfg cfg;
    std::vector<int> outer, inner;
    std::vector<Point2> opos, ipos;
    std::vector<double> heading; // travel heading at each column
    double exit_heading = 0;
};

// Target outer degree: alternation 4, 5, 4, ... from the first column, with
// the two columns nearest a connector held at 4 so the corner region stays
// packable. Chains sit one lower (no rung).
int target_degree(const PieceCfg& cfg, int i) {
    bool low = (i % 2 == 0);
    if (cfg.attach_begin && i <= 1) low = true;
    if (cfg.attach_end && i >= cfg.cols - 2) low = true;
    return (low ? 4 : 5) - (cfg.with_inner ? 0 : 1);
}

Piece build_course(Builder& b, Point2 start, double heading, const PieceCfg& cfg) {
    if (cfg.cols < 2) throw std::invalid_argument("course needs at least 2 columns");
    Piece piece;
    piece.cfg = cfg;

    double h = heading;
    Point2 p = start;
    for (int i = 0; i < cfg.cols; ++i) {
        piece.opos.push_back(p);
        piece.heading.push_back(h);
        double bend = cfg.bend;
        if (i < 2) bend += cfg.extra_bend_begin;
        if (i >= cfg.cols - 2) bend += cfg.extra_bend_end;
        h += bend; // inward = left
        if (i + 1 < cfg.cols) p = p + unit_dir(h) * 2.0;
    }
    piece.exit_heading = h;

    for (int i = 0; i < cfg.cols; ++i) piece.outer.push_back(b.add(piece.opos[i]));
    for (int i = 0; i + 1 < cfg.cols; ++i) b.link(piece.outer[i], piece.outer[i + 1]);

    if (cfg.with_inner) {
        for (int i = 0; i < cfg.cols; ++i) {
            // Bisector normal keeps the inner rail within contact range at bends.
            double h_in = (i == 0) ? piece.heading[0] : piece.heading[i];
            double h_prev = (i == 0) ? piece.heading[0] : piece.heading[i - 1];
            double n = (h_in + h_prev) / 2 + kPi / 2;
            piece.ipos.push_back(piece.opos[i] + unit_dir(n) * kRung);
        }
        for (int i = 0; i < cfg.cols; ++i) piece.inner.push_back(b.add(piece.ipos[i]));
        for (int i = 0; i + 1 < cfg.cols; ++i) b.link(piece.inner[i], piece.inner[i + 1]);
        for (int i = 0; i < cfg.cols; ++i) b.link(piece.outer[i], piece.inner[i]);
    }
    return piece;
}

// Extension placement for the interior columns of a piece. Target-5 columns
// carry a ring pair on the extension side, target-4 columns a near-stacked
// extension; both live on the right of the travel direction.
void place_interior_extensions(Builder& b, const Piece& piece) {
    const PieceCfg& cfg = piece.cfg;
    for (int i = 1; i + 1 < cfg.cols; ++i) {
        int core = 2 + (cfg.with_inner ? 1 : 0);
        int want = target_degree(cfg, i) - core;
        if (want <= 0) continue;
        double dir_fwd = piece.heading[i] + (cfg.bend / 2); // toward next column
        if (want == 1 && cfg.with_inner) {
            // Near-stack: clears both rails via the inward bend and the inner
            // disk via the rung overlap.
            Point2 p = piece.opos[i] + unit_dir(dir_fwd - kPi / 2) * kStackR;
            int id = b.add(p);
            b.link(piece.outer[i], id);
        } else if (want == 1) {
            place_pendant(b, piece.outer[i], dir_fwd - kPi / 2, -1.0);
        } else {
            // Ring pair at roughly the thirds of the extension-side arc.
            place_pendant(b, piece.outer[i], dir_fwd - 61.0 * kPi / 180, -1.0);
            place_pendant(b, piece.outer[i], dir_fwd - 122.0 * kPi / 180, -1.0);
        }
    }
}

// Free-end extension fan.
void place_end_extensions(Builder& b, const Piece& piece, bool begin_end) {
    const PieceCfg& cfg = piece.cfg;
    int i = begin_end ? 0 : cfg.cols - 1;
    if ((begin_end && cfg.attach_begin) || (!begin_end && cfg.attach_end)) return;
    int core = 1 + (cfg.with_inner ? 1 : 0);
    int want = target_degree(cfg, i) - core;
    double rail = begin_end ? piece.heading[0] : norm_angle(piece.heading[i] + kPi);
    double hint = rail - 64.0 * kPi / 180; // sweep into the extension side
    for (int t = 0; t < want; ++t) {
        int id = place_pendant(b, piece.outer[i], hint, -1.0);
        hint = std::atan2(b.pos[id].y - piece.opos[i].y, b.pos[id].x - piece.opos[i].x) -
               61.0 * kPi / 180;
    }
}

// Canonical corner connector data in the frame of the incoming piece's last
// column. The incoming course arrives at a_o heading `in_heading`; the
// outgoing course leaves from b_o with `out_heading`.
struct CornerTemplate {
    Point2 a_o, a_i, b_o, b_i, hub;
    double in_heading, out_heading;
};

CornerTemplate corner_template() {
    CornerTemplate t;
    double psi = kApex / 2;
    t.hub = {0, 0};
    t.a_o = unit_dir(kPi / 2 + psi) * 2.0;
    t.b_o = unit_dir(kPi / 2 - psi) * 2.0;
    double dxa = 2 * std::sin(psi) - 1;
    double ya = t.a_o.y + std::sqrt(kRung * kRung - dxa * dxa);
    t.a_i = {-1, ya};
    t.b_i = {1, ya};
    double sigma_a = std::atan2(t.a_i.y - t.a_o.y, t.a_i.x - t.a_o.x);
    double sigma_b = std::atan2(t.b_i.y - t.b_o.y, t.b_i.x - t.b_o.x);
    t.in_heading = sigma_a - kPi / 2;
    t.out_heading = sigma_b - kPi / 2;
    return t;
}

struct Rigid {
    double c = 1, s = 0;
    Point2 t{};

    Point2 operator()(Point2 p) const { return {c * p.x - s * p.y + t.x, s * p.x + c * p.y + t.y}; }
    double angle(double a) const { return a + std::atan2(s, c); }
};

Rigid fit(Point2 from, double from_ang, Point2 to, double to_ang, Point2 anchor_from = {},
          bool use_anchor = false) {
    Rigid r;
    double rot = to_ang - from_ang;
    r.c = std::cos(rot);
    r.s = std::sin(rot);
    Point2 base = use_anchor ? anchor_from : from;
    (void)base;
    Point2 rotated{r.c * from.x - r.s * from.y, r.s * from.x + r.c * from.y};
    r.t = to - rotated;
    return r;
}

// Joins the end of `in_piece` to a new corner. Places the hub (with three
// pendants, added later in the pendant pass) and returns the frame for the
// outgoing course plus the hub id.
struct CornerResult {
    int hub = -1;
    Point2 out_pos;
    double out_heading = 0;
};

CornerResult build_corner(Builder& b, const Piece& in_piece, bool with_inner,
                          std::vector<int>& hub_list) {
    const CornerTemplate t = corner_template();
    Point2 a_world = in_piece.opos.back();
    double h_world = in_piece.exit_heading;
    Rigid m = fit(t.a_o, t.in_heading, a_world, h_world);

    CornerResult res;
    res.hub = b.add(m(t.hub));
    hub_list.push_back(res.hub);
    b.link(res.hub, in_piece.outer.back());
    res.out_pos = m(t.b_o);
    res.out_heading = m.angle(t.out_heading);

    if (with_inner) {
        // The outgoing piece's first inner vertex must land on b_i; the course
        // generator reproduces it because headings and rung lengths match.
        (void)t.b_i;
    }
    return res;
}

void finish_corner(Builder& b, int hub, const Piece& in_piece, const Piece& out_piece,
                   bool with_inner) {
    b.link(hub, out_piece.outer.front());
    if (with_inner) b.link(in_piece.inner.back(), out_piece.inner.front());
}

// Pendant pass for one corner: the attach-column extension on each side plus
// the hub's three extension neighbors, packed as a bead chain around the
// outside of the corner.
void place_corner_extensions(Builder& b, const Piece& in_piece, const Piece& out_piece, int hub) {
    Point2 a = in_piece.opos.back();
    double rail_a = norm_angle(in_piece.heading.back() + kPi);
    int e = place_pendant(b, in_piece.outer.back(), rail_a - 64.0 * kPi / 180, -1.0);

    Point2 hubp = b.pos[hub];
    double hint = std::atan2(b.pos[e].y - hubp.y, b.pos[e].x - hubp.x) - 58.0 * kPi / 180;
    for (int t = 0; t < 3; ++t) {
        int id = place_pendant(b, hub, hint, -1.0);
        hint = std::atan2(b.pos[id].y - hubp.y, b.pos[id].x - hubp.x) - 58.0 * kPi / 180;
    }
    Point2 bo = out_piece.opos.front();
    (void)a;
    (void)bo;
    double rail_b = out_piece.heading.front();
    place_pendant(b, out_piece.outer.front(), rail_b + 64.0 * kPi / 180, +1.0);
}

} // namespace

GadgetGraph ladder(int k) {
    if (k < 2) throw std::invalid_argument("ladder: k must be >= 2");
    Builder b;
    PieceCfg cfg;
    cfg.cols = k;
    cfg.with_inner = true;
    Piece piece = build_course(b, {0, 0}, 0, cfg);
    place_interior_extensions(b, piece);
    place_end_extensions(b, piece, true);
    place_end_extensions(b, piece, false);
    b.ports["outer_first"] = piece.outer.front();
    b.ports["outer_last"] = piece.outer.back();
    b.ports["inner_first"] = piece.inner.front();
    b.ports["inner_last"] = piece.inner.back();
    return b.finish();
}

GadgetGraph corner_connector(const GadgetGraph& a, const GadgetGraph& g_b, int turn) {
    for (const char* p : {"outer_last", "inner_last"})
        if (!a.ports.count(p)) throw std::invalid_argument("corner_connector: A lacks port " + std::string(p));
    for (const char* p : {"outer_first", "inner_first"})
        if (!g_b.ports.count(p)) throw std::invalid_argument("corner_connector: B lacks port " + std::string(p));

    // Merge graphs: B's ids shifted, then hub + 3 extensions appended.
    Builder b;
    for (Point2 p : a.intended.centers) b.add(p);
    int off = static_cast<int>(b.pos.size());
    for (Point2 p : g_b.intended.centers) b.add(p);
    for (auto [u, v] : a.graph.edges()) b.link(u, v);
    for (auto [u, v] : g_b.graph.edges()) b.link(u + off, v + off);

    int a_o = a.ports.at("outer_last");
    int a_i = a.ports.at("inner_last");
    int b_o = g_b.ports.at("outer_first") + off;
    int b_i = g_b.ports.at("inner_first") + off;

    // A's end frame, derived from its last column.
    Point2 col = b.pos[a_i] - b.pos[a_o];
    double h_a = std::atan2(col.y, col.x) - kPi / 2;

    CornerTemplate t = corner_template();
    if (turn < 0) { // mirror: bend to the other side of A's course
        t.a_o.x = -t.a_o.x; t.a_i.x = -t.a_i.x; t.b_o.x = -t.b_o.x; t.b_i.x = -t.b_i.x;
        std::swap(t.a_o, t.b_o);
        std::swap(t.a_i, t.b_i);
        double sa = std::atan2(t.a_i.y - t.a_o.y, t.a_i.x - t.a_o.x);
        double sb = std::atan2(t.b_i.y - t.b_o.y, t.b_i.x - t.b_o.x);
        t.in_heading = sa + kPi / 2;
        t.out_heading = sb + kPi / 2;
    }
    Rigid m = fit(t.a_o, t.in_heading, b.pos[a_o], h_a);

    // Re-seat B: its first column goes onto the template's b side.
    Point2 bcol = g_b.intended.centers[g_b.ports.at("inner_first")] -
                  g_b.intended.centers[g_b.ports.at("outer_first")];
    double h_b_own = std::atan2(bcol.y, bcol.x) - (turn < 0 ? -kPi / 2 : kPi / 2);
    Rigid mb = fit(g_b.intended.centers[g_b.ports.at("outer_first")], h_b_own, m(t.b_o),
                   m.angle(t.out_heading));
    for (int v = off; v < off + g_b.graph.n; ++v) b.pos[v] = mb(g_b.intended.centers[v - off]);

    int hub = b.add(m(t.hub));
    b.link(b.pos.size() - 1 == static_cast<size_t>(hub) ? hub : hub, a_o);
    b.link(hub, b_o);
    b.link(a_i, b_i);

    // Hub extensions, packed between the two courses' endpoint fans.
    Point2 hubp = b.pos[hub];
    double hint = std::atan2(b.pos[a_o].y - hubp.y, b.pos[a_o].x - hubp.x) -
                  (turn < 0 ? -64.0 : 64.0) * kPi / 180;
    for (int i = 0; i < 3; ++i) {
        int id = place_pendant(b, hub, hint, turn < 0 ? +1.0 : -1.0);
        hint = std::atan2(b.pos[id].y - hubp.y, b.pos[id].x - hubp.x) -
               (turn < 0 ? -61.0 : 61.0) * kPi / 180;
    }

    b.ports = a.ports;
    for (auto& [name, v] : g_b.ports) b.ports["b." + name] = v + off;
    b.ports["hub"] = hub;
    return b.finish();
}

namespace {

// Common body for the rhombus approximations: two long courses joined at one
// end by three corner connectors with two short stubs between them.
GadgetGraph build_rhombus(int k, bool with_inner) {
    Builder b;
    const CornerTemplate t = corner_template();
    const double turn_conn = norm_angle(t.out_heading - t.in_heading);

    int stub_cols = 3;
    // Three connectors plus the bends inside two stubs must turn the course
    // around (pi in total).
    double stub_bend = (kPi - 3 * turn_conn - 6 * kBendMain) / (2 * stub_cols);

    std::vector<int> hubs;
    std::vector<Piece> pieces;

    PieceCfg main_cfg;
    main_cfg.cols = std::max(k, 2) | 1; // odd so the attach column is low-degree
    main_cfg.with_inner = with_inner;
    main_cfg.attach_end = true;

    PieceCfg stub_cfg;
    stub_cfg.cols = stub_cols;
    stub_cfg.with_inner = with_inner;
    stub_cfg.bend = stub_bend;
    stub_cfg.attach_begin = stub_cfg.attach_end = true;

    pieces.push_back(build_course(b, {0, 0}, 0, main_cfg));
    CornerResult c1 = build_corner(b, pieces.back(), with_inner, hubs);
    pieces.push_back(build_course(b, c1.out_pos, c1.out_heading, stub_cfg));
    finish_corner(b, c1.hub, pieces[0], pieces[1], with_inner);

    CornerResult c2 = build_corner(b, pieces.back(), with_inner, hubs);
    pieces.push_back(build_course(b, c2.out_pos, c2.out_heading, stub_cfg));
    finish_corner(b, c2.hub, pieces[1], pieces[2], with_inner);

    CornerResult c3 = build_corner(b, pieces.back(), with_inner, hubs);
    PieceCfg ret_cfg = main_cfg;
    ret_cfg.attach_end = false;
    ret_cfg.attach_begin = true;
    pieces.push_back(build_course(b, c3.out_pos, c3.out_heading, ret_cfg));
    finish_corner(b, c3.hub, pieces[2], pieces[3], with_inner);

    // Pendants: interior extensions first, then the crowded corner regions,
    // then the free-end fans.
    for (const Piece& p : pieces) place_interior_extensions(b, p);
    place_corner_extensions(b, pieces[0], pieces[1], hubs[0]);
    place_corner_extensions(b, pieces[1], pieces[2], hubs[1]);
    place_corner_extensions(b, pieces[2], pieces[3], hubs[2]);
    place_end_extensions(b, pieces[0], true);
    place_end_extensions(b, pieces[3], false);

    if (!with_inner) {
        // Stabilizing chain along the axis, hanging off the middle stub.
        const Piece& stub = pieces[1];
        int host = stub.outer[1];
        double inward = stub.heading[1] + kPi / 2;
        Point2 start = b.pos[host] + unit_dir(inward) * kPendant;
        PieceCfg stab_cfg;
        stab_cfg.cols = std::max(2, k - 1);
        stab_cfg.with_inner = false;
        stab_cfg.bend = 0.004;
        Piece stab = build_course(b, start, norm_angle(inward + kPi / 2 + 0.5), stab_cfg);
        b.link(host, stab.outer.front());
        place_interior_extensions(b, stab);
        place_end_extensions(b, stab, false);
        // begin end carries the bridge; place its remaining extensions.
        int core = 1 + 1; // rail + bridge
        int want = target_degree(stab_cfg, 0) - core;
        double hint = stab.heading[0] - 64.0 * kPi / 180;
        for (int i = 0; i < want; ++i)
            place_pendant(b, stab.outer.front(), hint, -1.0);
        pieces.push_back(stab);
    }

    b.ports["outer_first"] = pieces[0].outer.front();
    b.ports["outer_last"] = pieces[3].outer.back();
    if (with_inner) {
        b.ports["inner_first"] = pieces[0].inner.front();
        b.ports["inner_last"] = pieces[3].inner.back();
    }
    for (size_t i = 0; i < hubs.size(); ++i) b.ports["hub_" + std::to_string(i)] = hubs[i];
    return b.finish();
}

} // namespace

GadgetGraph rhombus_approx(int k, GadgetVariant variant) {
    if (k < 2) throw std::invalid_argument("rhombus_approx: k must be >= 2");
    return build_rhombus(k, variant == GadgetVariant::Outerplanar);
}

namespace {

GadgetGraph build_hexagon(int k, bool with_inner) {
    Builder b;
    const CornerTemplate t = corner_template();
    const double turn_conn = norm_angle(t.out_heading - t.in_heading);
    const double side_len = 2.0 * k - 1.0;

    int side_cols = std::max(3, static_cast<int>(std::lround((side_len - 4.0) / 2.0)) | 1);

    std::vector<int> hubs;
    std::vector<Piece> sides;

    // Per corner, bends at the two columns flanking the connector absorb the
    // remaining turn so every corner comes out at 60 degrees exactly.
    double base_curve = side_cols * kBendMain;
    double boost = (kPi / 3 - turn_conn - base_curve) / 4.0;

    PieceCfg cfg;
    cfg.cols = side_cols;
    cfg.with_inner = with_inner;
    cfg.attach_begin = cfg.attach_end = true;
    cfg.extra_bend_begin = boost;
    cfg.extra_bend_end = boost;

    Point2 p{0, 0};
    double h = 0;
    for (int s = 0; s < 6; ++s) {
        PieceCfg scfg = cfg;
        if (s == 0) {
            scfg.attach_begin = false;
            scfg.extra_bend_begin = 0;
        }
        if (s == 5) {
            scfg.attach_end = false;
            scfg.extra_bend_end = 0;
            scfg.cols = std::max(3, side_cols - 2); // leave the trace open
        }
        sides.push_back(build_course(b, p, h, scfg));
        if (s < 5) {
            CornerResult c = build_corner(b, sides.back(), with_inner, hubs);
            p = c.out_pos;
            h = c.out_heading;
        }
    }
    for (int s = 0; s < 5; ++s) finish_corner(b, hubs[s], sides[s], sides[s + 1], with_inner);

    for (const Piece& piece : sides) place_interior_extensions(b, piece);
    for (int s = 0; s < 5; ++s) place_corner_extensions(b, sides[s], sides[s + 1], hubs[s]);
    place_end_extensions(b, sides[0], true);
    place_end_extensions(b, sides[5], false);

    // Interior fill rows, attached to the boundary by one bridge edge each.
    Point2 center{0, 0};
    for (const Piece& piece : sides)
        for (Point2 q : piece.opos) center = center + q * (1.0 / (6.0 * piece.opos.size()));

    ConvexPolygon hex = make_regular_hexagon(side_len, center);
    // Align the polygon to the built boundary: vertices of the trace sit near
    // the hexagon corners; rotation by the first side's direction.
    double rot = sides[0].heading[0];
    for (auto& q : hex.pts) {
        Point2 d = q - center;
        q = center + Point2{d.x * std::cos(rot) - d.y * std::sin(rot),
                            d.x * std::sin(rot) + d.y * std::cos(rot)};
    }

    auto chord = [&](double y) {
        double lo = 0, hi = 0;
        bool any = false;
        for (size_t i = 0; i < hex.pts.size(); ++i) {
            Point2 a = hex.pts[i], q = hex.pts[(i + 1) % hex.pts.size()];
            if ((a.y - y) * (q.y - y) > 0) continue;
            if (std::abs(q.y - a.y) < 1e-12) continue;
            double x = a.x + (q.x - a.x) * (y - a.y) / (q.y - a.y);
            if (!any) {
                lo = hi = x;
                any = true;
            } else {
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
        }
        return any ? std::pair(lo, hi) : std::pair(0.0, -1.0);
    };

    std::vector<int> boundary_inner_like; // attachment targets: inner rail (ladder) or outer rail (chain)
    for (const Piece& piece : sides) {
        const auto& ids = with_inner ? piece.inner : piece.outer;
        for (int id : ids) boundary_inner_like.push_back(id);
    }

    const double row_pitch = 6.4;
    int fill_index = 0;
    for (double y = center.y - 2 * row_pitch; y <= center.y + 2 * row_pitch + 1e-9;
         y += row_pitch) {
        auto [lo, hi] = chord(y);
        int cols = static_cast<int>(std::floor((hi - lo - 10.5) / 2.0));
        if (cols < 3) continue;
        cols |= 1;
        Point2 start{(lo + hi) / 2 - cols + 1, y};
        PieceCfg fcfg;
        fcfg.cols = cols;
        fcfg.with_inner = with_inner;
        fcfg.bend = 0.004;
        Piece fill = build_course(b, start, 0, fcfg);
        // Bridge to the nearest boundary attachment vertex.
        int best = -1;
        double bestd = 1e18;
        for (int id : boundary_inner_like) {
            double d = dist(b.pos[id], b.pos[fill.outer.front()]);
            if (d < bestd) {
                bestd = d;
                best = id;
            }
        }
        if (best >= 0 && bestd < 12.0) {
            // Re-seat the whole row so the bridge is an exact contact.
            Point2 dir = b.pos[fill.outer.front()] - b.pos[best];
            double len = dir.norm();
            Point2 shift = dir * ((len - kPendant) / len) * -1.0;
            for (int id : fill.outer) b.pos[id] = b.pos[id] + shift;
            for (int id : fill.inner) b.pos[id] = b.pos[id] + shift;
            for (size_t i = 0; i < fill.opos.size(); ++i) fill.opos[i] = b.pos[fill.outer[i]];
            b.link(best, fill.outer.front());
        }
        place_interior_extensions(b, fill);
        place_end_extensions(b, fill, false);
        {
            int core = 1 + (with_inner ? 1 : 0) + (best >= 0 ? 1 : 0);
            int want = target_degree(fcfg, 0) - core;
            double hint = fill.heading[0] - 64.0 * kPi / 180;
            for (int i = 0; i < want; ++i)
                hint = std::atan2(b.pos[place_pendant(b, fill.outer.front(), hint, -1.0)].y, 1.0);
        }
        b.ports["fill_" + std::to_string(fill_index++)] = fill.outer.front();
    }

    b.ports["outer_first"] = sides[0].outer.front();
    b.ports["outer_last"] = sides[5].outer.back();
    for (size_t i = 0; i < hubs.size(); ++i) b.ports["hub_" + std::to_string(i)] = hubs[i];
    return b.finish();
}

} // namespace

GadgetGraph hexagon_approx(int k, GadgetVariant variant) {
    if (k < 4 || (k - 4) % 6 != 0)
        throw std::invalid_argument("hexagon_approx: k must be 6n + 4");
    return build_hexagon(k, variant == GadgetVariant::Outerplanar);
}

std::string serialize_ports(const GadgetGraph& g) {
    std::ostringstream out;
    for (const auto& [name, v] : g.ports) out << "port " << name << " " << v << "\n";
    return out.str();
}

} // namespace udisk
