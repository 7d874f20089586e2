#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qhv/geometry.hpp"

namespace qhv {

/// How the region outside the pivot box is cut into subproblems.
enum class SplitScheme {
    /// 2^d - 2 basic hypercuboids, one per comparison vector against the pivot.
    Qhv,
    /// d nested schemata: child j holds coordinates < pivot on axes 0..j-1
    /// and >= pivot on axis j.
    Qhv2,
};

const char* to_string(SplitScheme scheme);

/// Largest dimension the basic-hypercuboid split accepts (32-bit masks).
inline constexpr std::size_t kMaxQhvDim = 30;
/// Largest small_set_threshold; larger sets fall back to inclusion-exclusion.
inline constexpr std::size_t kMaxSmallSetThreshold = 12;

struct EngineConfig {
    SplitScheme scheme = SplitScheme::Qhv2;
    /// Subproblems with at most this many points are evaluated directly:
    /// closed form for <= 2 points, inclusion-exclusion above. Range [2, 12].
    std::size_t small_set_threshold = 2;
    /// Recursion cut. Subproblems with 1..cut points become uncounted leaves
    /// and no hypervolume is produced.
    std::optional<std::size_t> cut_threshold;
    /// Drop points weakly dominated by the pivot while assigning children.
    /// Such points also fail the strict-exceedance test of every child, so
    /// turning this off changes neither the children nor the result.
    bool prune_by_pivot = true;
    /// Run the quadratic Pareto filter on every child before recursing.
    bool explicit_pareto_filter = false;
    /// Checked at every internal node; TimeoutError once passed.
    std::optional<std::chrono::steady_clock::time_point> deadline;

    void validate() const;
};

struct RunStats {
    std::uint64_t internal_nodes = 0;
    std::uint64_t leaves = 0;
    std::uint64_t max_depth = 0;
    std::uint64_t dominance_comparisons = 0;
    std::uint64_t pivot_selections = 0;
};

struct HvResult {
    /// Empty in cut mode.
    std::optional<double> hypervolume;
    RunStats stats;
};

/// A box and the points assigned to it. Every point lies in
/// (box.lower, box.upper] on each axis.
struct Subproblem {
    Hypercuboid box;
    PointSet points;
};

/// Index of the point with the largest box volume above `ref`; lowest index wins ties.
std::size_t select_pivot(const PointSet& points, std::span<const double> ref);

/// The d children of the schema split, in axis order. `points` must not
/// contain the pivot itself. When `prune_by_pivot` is set, points weakly
/// dominated by the pivot are dropped from every child.
std::vector<Subproblem> split_qhv2(const Hypercuboid& box, std::span<const double> pivot,
                                   const PointSet& points, bool prune_by_pivot = true);

/// The 2^d - 2 basic-hypercuboid children, ordered by ascending comparison
/// vector (bit j set = coordinate j at or above the pivot). A point is
/// projected into every child whose set bits it satisfies.
std::vector<Subproblem> split_qhv(const Hypercuboid& box, std::span<const double> pivot,
                                  const PointSet& points, bool prune_by_pivot = true);

/// Closed form for up to two points, inclusion-exclusion above.
double hv_small(const PointSet& points, std::span<const double> ref);

/// Lebesgue measure of the union of boxes [box.lower, clip(s, box.upper)].
/// Points that do not strictly exceed box.lower on every axis after clipping
/// contribute nothing and are dropped on entry.
HvResult hypervolume(const PointSet& points, const Hypercuboid& box,
                     const EngineConfig& cfg = {});

/// Node and leaf counts of the recursion cut at cfg.cut_threshold, which must be set.
RunStats count_tree(const PointSet& points, const Hypercuboid& box, const EngineConfig& cfg);

}  // namespace qhv
