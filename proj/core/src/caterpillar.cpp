#include "udisk/caterpillar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace udisk {

namespace {

constexpr double kPi = std::numbers::pi;

struct Slot {
    double angle;       // relative to the incoming axis; ignored for stacked slots
    bool stacked = false;
    int stack_side = 0; // +1 shift up, -1 shift down (relative to axis)
};

} // namespace

UdrDecision recognize_caterpillar(const Graph& g, const TreeClass& tc) {
    if (tc.kind != TreeKind::Caterpillar)
        throw std::invalid_argument("recognize_caterpillar: input is not a caterpillar");

    UdrDecision d;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) >= 6) {
            d.answer = UdrAnswer::No;
            d.reason = UdrNoReason::DegreeAtLeastSix;
            d.offending = {v, -1};
            return d;
        }
    for (size_t i = 0; i + 1 < tc.backbone.size(); ++i) {
        int u = tc.backbone[i], v = tc.backbone[i + 1];
        if (g.degree(u) == 5 && g.degree(v) == 5) {
            d.answer = UdrAnswer::No;
            d.reason = UdrNoReason::AdjacentDegreeFiveBackbonePair;
            d.offending = {u, v};
            return d;
        }
    }
    d.answer = UdrAnswer::Yes;
    return d;
}

UdrDecision recognize_caterpillar(const Graph& g) {
    return recognize_caterpillar(g, classify_tree(g));
}

DiskLayout construct_caterpillar_udr(const Graph& g, const TreeClass& tc,
                                     const ConstructionParams& params) {
    UdrDecision dec = recognize_caterpillar(g, tc);
    if (dec.answer != UdrAnswer::Yes)
        throw std::invalid_argument("construct_caterpillar_udr: graph admits no UDR");

    const int n = g.n;
    const double eps = params.epsilon > 0 ? params.epsilon : kPi / (64.0 * (n + 2));
    const double C = std::max(1.0, params.shift_denominator);
    const double mu = params.overlap_margin >= 0 ? params.overlap_margin : eps / 100.0;
    if (mu >= eps) throw std::invalid_argument("construct_caterpillar_udr: overlap margin must be < epsilon");
    const double R = 2.0 - mu;

    // Near-stacked shift after a degree-5 vertex. The paper's eps/(C n) is
    // kept, with a floor so the non-edge clearances sqrt(R^2 + s^2) - 2 stay
    // an order of magnitude above the verifier tolerance, and a cap so the
    // shift remains far smaller than the angular-offset margins.
    const double s_shift =
        std::min(std::max({eps / (C * std::max(n, 1)), 2e-4, 2.5 * std::sqrt(mu + 1e-9)}), 1.0 / 16);
    const double eta = 4.0 * s_shift; // extra angular gap between t' and the bent successor

    DiskLayout out;
    out.centers.assign(n, {});

    std::vector<char> on_bb(n, 0);
    for (int v : tc.backbone) on_bb[v] = 1;
    auto leaves_of = [&](int v) {
        std::vector<int> ls;
        for (int u : g.adj[v])
            if (!on_bb[u]) ls.push_back(u);
        return ls; // adjacency is sorted, so ls is sorted
    };

    const int m = static_cast<int>(tc.backbone.size());

    if (m == 1) {
        int c = tc.backbone[0];
        out.centers[c] = {0, 0};
        auto ls = leaves_of(c);
        int k = static_cast<int>(ls.size());
        for (int j = 0; j < k; ++j)
            out.centers[ls[j]] = unit_dir(2 * kPi * j / k) * R;
        return out;
    }

    Point2 pos{0, 0};
    double axis = 0;      // incoming axis angle at the current vertex
    double q = 0;         // running angular offset, strictly increasing
    int side = +1;        // side of the next degree-5 extra leaf (+1 top)
    int stack = 0;        // nonzero: this vertex's same-side leaf is near-stacked
    bool bump_q = false;  // raise q past the stacked shift at the vertex after a stack

    for (int i = 0; i < m; ++i) {
        int v = tc.backbone[i];
        bool first = (i == 0), last = (i == m - 1);
        out.centers[v] = pos;

        q += eps;
        if (bump_q) {
            q = std::max(q, s_shift);
            bump_q = false;
        }

        double out_angle = axis;
        std::vector<Slot> slots;
        int next_stack = 0;

        if (stack != 0) {
            // Successor of a degree-5 vertex: the same-side leaf sits almost
            // on the vertex, shifted orthogonally to the backbone so its disk
            // clears both backbone neighbors.
            slots.push_back({0, true, stack});
            slots.push_back({-stack * (2 * kPi / 3 - q), false, 0});
            if (last) slots.push_back({0, false, 0});
            bump_q = true;
        } else if (g.degree(v) == 5) {
            double bend = q + eps + eta;
            slots.push_back({side * (2 * kPi / 3 - q), false, 0});       // t
            slots.push_back({side * (kPi / 3 - q - eps), false, 0});     // t'
            slots.push_back({-side * (2 * kPi / 3 - q), false, 0});      // b
            if (first) slots.push_back({kPi, false, 0});
            out_angle = axis - side * bend;
            if (last) slots.push_back({-side * bend, false, 0});
            next_stack = side;
            side = -side;
        } else {
            slots.push_back({2 * kPi / 3 - q, false, 0});
            slots.push_back({-(2 * kPi / 3 - q), false, 0});
            if (first) slots.push_back({kPi, false, 0});
            if (last) slots.push_back({0, false, 0});
        }

        auto ls = leaves_of(v);
        for (size_t j = 0; j < ls.size(); ++j) {
            const Slot& s = slots.at(j); // recognition guarantees enough slots
            if (s.stacked)
                out.centers[ls[j]] = pos + unit_dir(axis + s.stack_side * kPi / 2) * s_shift;
            else
                out.centers[ls[j]] = pos + unit_dir(axis + s.angle) * R;
        }

        stack = next_stack;
        if (!last) {
            pos = pos + unit_dir(out_angle) * R;
            axis = out_angle;
        }
    }
    return out;
}

DiskLayout construct_caterpillar_udr(const Graph& g, const ConstructionParams& params) {
    return construct_caterpillar_udr(g, classify_tree(g), params);
}

const char* udr_no_reason_name(UdrNoReason r) {
    switch (r) {
    case UdrNoReason::None: return "none";
    case UdrNoReason::DegreeAtLeastSix: return "degree-at-least-6";
    case UdrNoReason::AdjacentDegreeFiveBackbonePair: return "adjacent-degree-5-backbone-pair";
    }
    return "?";
}

} // namespace udisk
