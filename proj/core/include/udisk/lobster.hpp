#pragma once

#include "udisk/geometry.hpp"
#include "udisk/graph.hpp"
#include "udisk/tree.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace udisk {

/// Strictly x-increasing spine step directions, in tie-breaking order.
inline constexpr std::array<GridCoord, 3> kForward3{GridCoord{1, 0}, GridCoord{1, -1},
                                                    GridCoord{0, 1}};

/// Sorted (descending) list of child degrees of a backbone vertex; a child's
/// degree is 1 + its number of grandchildren.
using DescendantSpec = std::vector<int>;

DescendantSpec gamma_of(const Graph& g, const TreeClass& tc, int backbone_vertex);

/// Head-relative occupancy window: cells with |Euclidean x-offset| <= ex_max
/// and |db| <= db_max. Bit order is deterministic (db asc, then a asc).
class Window {
public:
    Window(int ex_max, int db_max);
    static const Window& standard(); // 4, 4

    int ex_max() const { return ex_max_; }
    int db_max() const { return db_max_; }
    int bits() const { return static_cast<int>(cells_.size()); }
    const std::vector<GridCoord>& cells() const { return cells_; }

    int index_of(GridCoord c) const; // -1 outside
    bool occupied(std::uint64_t mask, GridCoord c) const;
    std::uint64_t set(std::uint64_t mask, GridCoord c) const; // no-op outside
    std::uint64_t head_bit() const { return head_bit_; }

    /// Translates the window so the head moves by `dir` (occupancy shifts by -dir).
    std::uint64_t shift(std::uint64_t mask, GridCoord dir) const;
    /// Reflection across the horizontal spine axis: (a, b) -> (a + b, -b).
    std::uint64_t reflect(std::uint64_t mask) const;
    /// Clears cells that no future strictly-x-monotone placement can touch
    /// (Euclidean x-offset <= -4 behind the head).
    std::uint64_t trim_irrelevant(std::uint64_t mask) const;

private:
    int ex_max_, db_max_;
    std::vector<GridCoord> cells_;
    std::vector<std::int8_t> reflect_map_;
    std::uint64_t head_bit_ = 0;
    std::uint64_t relevant_mask_ = 0;
    int lo_a_, hi_a_, lo_b_, hi_b_;
    std::vector<std::int8_t> index_table_;
};

/// Canonical DP state: occupancy bitmask around the spine head plus the
/// incoming spine direction (0 = none, 1..3 = index into kForward3 + 1).
struct DpSignature {
    std::uint64_t mask = 0;
    std::uint8_t indir = 0;

    friend bool operator==(const DpSignature&, const DpSignature&) = default;
};

DpSignature canonical_signature(const Window& w, DpSignature s);

/// One transition option: the next backbone vertex's cell plus the placement
/// of the current vertex's children and grandchildren. Cells are relative to
/// the current head. dir == -1 means no spine step (final vertex).
struct Placement {
    int dir = -1;
    GridCoord spine_step{};
    std::vector<GridCoord> child_cells;
    std::vector<std::vector<GridCoord>> grandchild_cells;
};

enum class PlacementMode { Forward3, All6 };

/// All placements of the next spine cell (3 strictly-x-increasing directions,
/// or all 6) together with all ways to place the current vertex's descendants
/// per gamma into free cells. Deduplicated under spine-axis reflection when
/// the signature itself is reflection-symmetric.
std::vector<Placement> enumerate_placements(const DpSignature& sig, const DescendantSpec& gamma,
                                            PlacementMode mode,
                                            const Window& w = Window::standard());

struct DpResult {
    bool feasible = false;
    GridLayout witness;     // valid when feasible
    int max_frontier = 0;   // largest per-index state count observed
};

/// Linear-time recognition of lobsters admitting a weak UDC on the triangular
/// grid (equivalently, a strictly x-monotone one). The witness passes
/// verify_weak_udc_grid. Requires kind in {Caterpillar, Lobster}.
DpResult dp_recognize(const Graph& g, const TreeClass& tc, const Window& w = Window::standard());

class BoundsExceeded : public std::runtime_error {
public:
    explicit BoundsExceeded(int bound)
        : std::runtime_error("brute force search left the bounded region (half-width " +
                             std::to_string(bound) + ")") {}
};

struct BruteForceResult {
    bool feasible = false;
    long long count = 0; // distinct layouts after symmetry canonicalization
    std::vector<GridLayout> witnesses;
};

/// Exhaustive backtracking over all grid placements. The first backbone cell
/// is pinned at the origin and the second at (1, 0); layouts are counted up
/// to the remaining lattice symmetry (reflection across the spine axis; all
/// 12 symmetries when the backbone is a single vertex). Throws BoundsExceeded
/// if any placement attempt leaves the region (never truncates silently).
BruteForceResult brute_force_enumerate(const Graph& g, const TreeClass& tc, int bound_halfwidth,
                                       bool count_all = true);

struct InductionCounterexample {
    std::string case_id;
    std::uint64_t theta = 0; // projected canonical occupancy pattern
    DescendantSpec gamma;
};

struct InductionReport {
    int ex_max = 0, db_max = 0;
    long long gamma_count = 0;
    long long theta_reachable = 0;  // canonical closure states
    long long theta_dead_end = 0;   // reachable states with all 3 forward cells blocked
    long long theta_projected = 0;  // distinct projected patterns entering the check
    long long cases = 0;
    long long realizable6 = 0;
    long long realizable3 = 0;
    std::vector<InductionCounterexample> counterexamples;

    std::string to_json() const;
    std::string summary() const;
};

/// Replicates the computer-assisted induction step: explores every
/// DP-reachable occupancy pattern from an all-free start, and checks for
/// every (pattern, gamma) pair that realizability with one of six spine
/// placements implies realizability with one of the three strictly
/// x-monotone ones. Patterns with no free forward cell admit no extension at
/// all and are tallied separately as dead ends.
InductionReport induction_case_report(const Window& w = Window::standard(), int jobs = 1);

} // namespace udisk
