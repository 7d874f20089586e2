#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "qhv/geometry.hpp"

// Slow, independent hypervolume routines. Used to cross-check the engine and,
// for inclusion_exclusion, as its small-set evaluator.
namespace qhv::oracle {

/// Largest set inclusion_exclusion accepts; the cost is Theta(2^n).
inline constexpr std::size_t kInclusionExclusionCap = 20;

/// Sum over nonempty subsets T of (-1)^(|T|+1) * vol([r, min T]).
/// Subsets whose running intersection is empty are skipped together with
/// all their supersets. Throws UsageError above kInclusionExclusionCap.
double inclusion_exclusion(const PointSet& points, std::span<const double> ref);

/// Exact area for d = 2 by a sweep over descending first coordinate.
double sweep_2d(const PointSet& points, std::span<const double> ref);

struct MonteCarloEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};

/// Uniform sampling of `box`; a sample counts when some point weakly
/// dominates it. Uses CounterRng stream 0 of `seed`.
MonteCarloEstimate monte_carlo(const PointSet& points, const Hypercuboid& box,
                               std::uint64_t samples, std::uint64_t seed);

}  // namespace qhv::oracle
