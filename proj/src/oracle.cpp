#include "qhv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qhv/errors.hpp"
#include "qhv/random.hpp"

namespace qhv::oracle {

namespace {

void check_dims(const PointSet& points, std::span<const double> ref) {
    if (!points.empty() && points.dim() != ref.size()) {
        throw UsageError("dimension mismatch: points have " + std::to_string(points.dim()) +
                         ", reference has " + std::to_string(ref.size()));
    }
}

struct SubsetWalk {
    const PointSet& points;
    std::span<const double> ref;
    std::size_t dim;
    // Scratch rows, one per recursion level.
    std::vector<double> mins;
    double positive = 0.0;
    double negative = 0.0;

    void descend(std::size_t start, std::size_t level, std::span<const double> running) {
        double* row = mins.data() + level * dim;
        for (std::size_t i = start; i < points.size(); ++i) {
            const auto p = points[i];
            bool empty = false;
            double vol = 1.0;
            for (std::size_t j = 0; j < dim; ++j) {
                row[j] = level == 0 ? p[j] : std::min(running[j], p[j]);
                const double side = row[j] - ref[j];
                if (!(side > 0.0)) {
                    empty = true;
                    break;
                }
                vol *= side;
            }
            if (empty) continue;
            if (level % 2 == 0) {
                positive += vol;
            } else {
                negative += vol;
            }
            descend(i + 1, level + 1, {row, dim});
        }
    }
};

}  // namespace

double inclusion_exclusion(const PointSet& points, std::span<const double> ref) {
    check_dims(points, ref);
    if (points.size() > kInclusionExclusionCap) {
        throw UsageError("inclusion_exclusion accepts at most " +
                         std::to_string(kInclusionExclusionCap) + " points, got " +
                         std::to_string(points.size()));
    }
    if (points.empty()) return 0.0;
    SubsetWalk walk{points, ref, ref.size(), std::vector<double>(points.size() * ref.size())};
    walk.descend(0, 0, {});
    return std::max(0.0, walk.positive - walk.negative);
}

double sweep_2d(const PointSet& points, std::span<const double> ref) {
    if (ref.size() != 2) throw UsageError("sweep_2d requires d = 2");
    check_dims(points, ref);
    std::vector<std::pair<double, double>> pts;
    pts.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto p = points[i];
        if (p[0] > ref[0] && p[1] > ref[1]) pts.emplace_back(p[0], p[1]);
    }
    // Descending x; among equal x the tallest first so the rest add nothing.
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second > b.second;
    });
    double area = 0.0;
    double top = ref[1];
    for (const auto& [x, y] : pts) {
        if (y > top) {
            area += (x - ref[0]) * (y - top);
            top = y;
        }
    }
    return area;
}

MonteCarloEstimate monte_carlo(const PointSet& points, const Hypercuboid& box,
                               std::uint64_t samples, std::uint64_t seed) {
    if (samples == 0) throw UsageError("monte_carlo needs at least one sample");
    check_dims(points, box.lower());
    const std::size_t d = box.dim();
    const auto lo = box.lower().coords();
    const auto hi = box.upper().coords();
    CounterRng rng(seed, 0);
    std::vector<double> x(d);
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (std::size_t j = 0; j < d; ++j) x[j] = lo[j] + (hi[j] - lo[j]) * rng.uniform();
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto p = points[i];
            std::size_t j = 0;
            while (j < d && p[j] >= x[j]) ++j;
            if (j == d) {
                ++hits;
                break;
            }
        }
    }
    const double vol = box.volume();
    const double frac = static_cast<double>(hits) / static_cast<double>(samples);
    return {vol * frac,
            vol * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples))};
}

}  // namespace qhv::oracle
