#include "qhv/engine.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "qhv/errors.hpp"
#include "qhv/oracle.hpp"

namespace qhv {

const char* to_string(SplitScheme scheme) {
    return scheme == SplitScheme::Qhv ? "qhv" : "qhv2";
}

void EngineConfig::validate() const {
    if (small_set_threshold < 2 || small_set_threshold > kMaxSmallSetThreshold) {
        throw ConfigError("small_set_threshold must lie in [2, " +
                          std::to_string(kMaxSmallSetThreshold) + "]");
    }
    if (cut_threshold && *cut_threshold < 1) {
        throw ConfigError("cut_threshold must be at least 1");
    }
}

namespace {

using Mask = std::uint32_t;

void check_dim(std::size_t expected, std::size_t got, const char* what) {
    if (expected != got) {
        throw UsageError(std::string("dimension mismatch for ") + what + ": expected " +
                         std::to_string(expected) + ", got " + std::to_string(got));
    }
}

double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= 4) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

double raw_box_volume(const double* s, const double* r, std::size_t d) {
    double v = 1.0;
    for (std::size_t j = 0; j < d; ++j) {
        const double side = s[j] - r[j];
        if (!(side > 0.0)) return 0.0;
        v *= side;
    }
    return v;
}

double raw_hv_two(const double* a, const double* b, const double* r, std::size_t d) {
    double both = 1.0;
    for (std::size_t j = 0; j < d; ++j) {
        const double side = std::min(a[j], b[j]) - r[j];
        if (!(side > 0.0)) {
            both = 0.0;
            break;
        }
        both *= side;
    }
    return raw_box_volume(a, r, d) + raw_box_volume(b, r, d) - both;
}

// Keeps p if min(p, upper) strictly exceeds lower on every axis; writes the
// clipped coordinates to out.
bool clip_into(std::span<const double> p, std::span<const double> lower,
               std::span<const double> upper, std::vector<double>& out) {
    out.resize(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        out[j] = std::min(p[j], upper[j]);
        if (!(out[j] > lower[j])) return false;
    }
    return true;
}

void qhv2_child_box(std::span<const double> lower, std::span<const double> upper,
                    std::span<const double> pivot, std::size_t axis,
                    std::vector<double>& child_lower, std::vector<double>& child_upper) {
    child_lower.assign(lower.begin(), lower.end());
    child_upper.assign(upper.begin(), upper.end());
    child_lower[axis] = pivot[axis];
    for (std::size_t l = 0; l < axis; ++l) child_upper[l] = pivot[l];
}

void qhv_child_box(std::span<const double> lower, std::span<const double> upper,
                   std::span<const double> pivot, Mask vector,
                   std::vector<double>& child_lower, std::vector<double>& child_upper) {
    const std::size_t d = lower.size();
    child_lower.resize(d);
    child_upper.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
        if (vector & (Mask{1} << j)) {
            child_lower[j] = pivot[j];
            child_upper[j] = upper[j];
        } else {
            child_lower[j] = lower[j];
            child_upper[j] = pivot[j];
        }
    }
}

Hypercuboid make_box(const std::vector<double>& lower, const std::vector<double>& upper) {
    return {Point(lower), Point(upper)};
}

void check_split_args(const Hypercuboid& box, std::span<const double> pivot,
                      const PointSet& points) {
    check_dim(box.dim(), pivot.size(), "pivot");
    if (!points.empty()) check_dim(box.dim(), points.dim(), "points");
}

// Flat-buffer recursion. Every node owns its lower/upper corners and a
// row-major point buffer whose rows lie in (lower, upper].
class Recursion {
public:
    Recursion(const EngineConfig& cfg, std::size_t dim, std::size_t root_size)
        : cfg_(cfg), d_(dim), depth_limit_(10 * std::max<std::size_t>(root_size, 1)) {}

    double solve(const std::vector<double>& lower, const std::vector<double>& upper,
                 const std::vector<double>& pts, std::size_t depth) {
        const std::size_t n = pts.size() / d_;
        if (n == 0) return 0.0;
        if (depth > depth_limit_) {
            throw std::runtime_error("recursion depth guard exceeded");
        }
        stats_.max_depth = std::max<std::uint64_t>(stats_.max_depth, depth);

        if (cfg_.cut_threshold) {
            if (n <= *cfg_.cut_threshold) {
                ++stats_.leaves;
                return 0.0;
            }
        } else if (n <= cfg_.small_set_threshold) {
            ++stats_.leaves;
            return evaluate_small(pts, n, lower);
        }

        if (cfg_.deadline && std::chrono::steady_clock::now() > *cfg_.deadline) {
            throw TimeoutError("hypervolume computation timed out");
        }
        ++stats_.internal_nodes;
        ++stats_.pivot_selections;
        std::size_t best = 0;
        double best_volume = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double v = raw_box_volume(&pts[i * d_], lower.data(), d_);
            if (v > best_volume) {
                best_volume = v;
                best = i;
            }
        }
        const std::vector<double> pivot(pts.begin() + best * d_, pts.begin() + (best + 1) * d_);

        // A point lands in a child only where it strictly exceeds the child's
        // lower corner, so coordinates tying the pivot never reach a child and
        // points weakly dominated by the pivot reach none.
        std::vector<std::uint32_t> rows;
        rows.reserve(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == best) continue;
            ++stats_.dominance_comparisons;
            const double* p = &pts[i * d_];
            bool above = false;
            for (std::size_t j = 0; j < d_ && !above; ++j) above = p[j] > pivot[j];
            if (above) rows.push_back(static_cast<std::uint32_t>(i));
        }

        std::vector<double> child_volumes;
        if (cfg_.scheme == SplitScheme::Qhv2) {
            child_volumes.reserve(d_);
            std::vector<double> child_lower, child_upper;
            for (std::size_t axis = 0; axis < d_; ++axis) {
                std::vector<std::uint32_t> members;
                for (std::uint32_t i : rows) {
                    if (pts[i * d_ + axis] > pivot[axis]) members.push_back(i);
                }
                if (members.empty()) continue;
                qhv2_child_box(lower, upper, pivot, axis, child_lower, child_upper);
                child_volumes.push_back(recurse(child_lower, child_upper, pts, members, depth));
            }
        } else {
            // Child v receives every point whose strict-above mask contains v.
            const Mask full = (Mask{1} << d_) - 1;
            std::map<Mask, std::vector<std::uint32_t>> children;
            for (std::uint32_t i : rows) {
                const double* p = &pts[i * d_];
                Mask m = 0;
                for (std::size_t j = 0; j < d_; ++j) {
                    if (p[j] > pivot[j]) m |= Mask{1} << j;
                }
                for (Mask v = m; v != 0; v = (v - 1) & m) {
                    if (v != full) children[v].push_back(i);
                }
            }
            child_volumes.reserve(children.size());
            std::vector<double> child_lower, child_upper;
            for (const auto& [vector, members] : children) {
                qhv_child_box(lower, upper, pivot, vector, child_lower, child_upper);
                child_volumes.push_back(recurse(child_lower, child_upper, pts, members, depth));
            }
        }
        return best_volume + pairwise_sum(child_volumes);
    }

    const RunStats& stats() const { return stats_; }

private:
    double recurse(const std::vector<double>& child_lower, const std::vector<double>& child_upper,
                   const std::vector<double>& pts, const std::vector<std::uint32_t>& members,
                   std::size_t depth) {
        std::vector<double> child;
        child.reserve(members.size() * d_);
        for (std::uint32_t i : members) {
            const double* p = &pts[i * d_];
            for (std::size_t j = 0; j < d_; ++j) child.push_back(std::min(p[j], child_upper[j]));
        }
        if (cfg_.explicit_pareto_filter && members.size() > 1) {
            child = filtered(child);
        }
        return solve(child_lower, child_upper, child, depth + 1);
    }

    std::vector<double> filtered(const std::vector<double>& flat) {
        PointSet set(d_);
        const std::size_t n = flat.size() / d_;
        set.reserve(n);
        for (std::size_t i = 0; i < n; ++i) set.push_back({flat.data() + i * d_, d_});
        std::vector<double> out;
        for (std::size_t i : pareto_filter_indices(set, &stats_.dominance_comparisons)) {
            const auto row = set[i];
            out.insert(out.end(), row.begin(), row.end());
        }
        return out;
    }

    double evaluate_small(const std::vector<double>& pts, std::size_t n,
                          const std::vector<double>& lower) {
        if (n == 1) return raw_box_volume(pts.data(), lower.data(), d_);
        if (n == 2) return raw_hv_two(pts.data(), pts.data() + d_, lower.data(), d_);
        PointSet set(d_);
        set.reserve(n);
        for (std::size_t i = 0; i < n; ++i) set.push_back({pts.data() + i * d_, d_});
        return oracle::inclusion_exclusion(set, lower);
    }

    const EngineConfig& cfg_;
    std::size_t d_;
    std::size_t depth_limit_;
    RunStats stats_;
};

}  // namespace

std::size_t select_pivot(const PointSet& points, std::span<const double> ref) {
    if (points.empty()) throw UsageError("select_pivot on an empty set");
    check_dim(points.dim(), ref.size(), "reference point");
    std::size_t best = 0;
    double best_volume = -1.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double v = box_volume(points[i], ref);
        if (v > best_volume) {
            best_volume = v;
            best = i;
        }
    }
    return best;
}

std::vector<Subproblem> split_qhv2(const Hypercuboid& box, std::span<const double> pivot,
                                   const PointSet& points, bool prune_by_pivot) {
    check_split_args(box, pivot, points);
    const std::size_t d = box.dim();
    std::vector<Subproblem> out;
    out.reserve(d);
    std::vector<double> lower, upper, clipped;
    for (std::size_t axis = 0; axis < d; ++axis) {
        qhv2_child_box(box.lower().coords(), box.upper().coords(), pivot, axis, lower, upper);
        PointSet members(d);
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto p = points[i];
            if (prune_by_pivot && weakly_dominates(pivot, p)) continue;
            if (!(p[axis] >= pivot[axis])) continue;
            if (clip_into(p, lower, upper, clipped)) members.push_back(clipped);
        }
        out.push_back({make_box(lower, upper), std::move(members)});
    }
    return out;
}

std::vector<Subproblem> split_qhv(const Hypercuboid& box, std::span<const double> pivot,
                                  const PointSet& points, bool prune_by_pivot) {
    check_split_args(box, pivot, points);
    const std::size_t d = box.dim();
    if (d > kMaxQhvDim) {
        throw ConfigError("basic-hypercuboid split supports d <= " + std::to_string(kMaxQhvDim));
    }
    const Mask full = (Mask{1} << d) - 1;
    std::vector<Subproblem> out;
    out.reserve(full - 1);
    std::vector<double> lower, upper, clipped;
    for (Mask v = 1; v < full; ++v) {
        qhv_child_box(box.lower().coords(), box.upper().coords(), pivot, v, lower, upper);
        PointSet members(d);
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto p = points[i];
            if (prune_by_pivot && weakly_dominates(pivot, p)) continue;
            bool fits = true;
            for (std::size_t j = 0; j < d && fits; ++j) {
                if ((v & (Mask{1} << j)) && !(p[j] >= pivot[j])) fits = false;
            }
            if (fits && clip_into(p, lower, upper, clipped)) members.push_back(clipped);
        }
        out.push_back({make_box(lower, upper), std::move(members)});
    }
    return out;
}

double hv_small(const PointSet& points, std::span<const double> ref) {
    if (points.empty()) return 0.0;
    check_dim(points.dim(), ref.size(), "reference point");
    const std::size_t d = ref.size();
    if (points.size() == 1) return box_volume(points[0], ref);
    if (points.size() == 2) return raw_hv_two(points[0].data(), points[1].data(), ref.data(), d);
    return oracle::inclusion_exclusion(points, ref);
}

HvResult hypervolume(const PointSet& points, const Hypercuboid& box, const EngineConfig& cfg) {
    cfg.validate();
    const std::size_t d = box.dim();
    if (!points.empty()) check_dim(d, points.dim(), "points");
    if (cfg.scheme == SplitScheme::Qhv && d > kMaxQhvDim) {
        throw ConfigError("basic-hypercuboid split supports d <= " + std::to_string(kMaxQhvDim));
    }

    const std::vector<double> lower(box.lower().coords().begin(), box.lower().coords().end());
    const std::vector<double> upper(box.upper().coords().begin(), box.upper().coords().end());
    std::vector<double> root;
    root.reserve(points.size() * d);
    std::vector<double> clipped;
    std::size_t kept = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (clip_into(points[i], lower, upper, clipped)) {
            root.insert(root.end(), clipped.begin(), clipped.end());
            ++kept;
        }
    }
    if (cfg.explicit_pareto_filter && kept > 1) {
        PointSet set(d);
        for (std::size_t i = 0; i < kept; ++i) set.push_back({root.data() + i * d, d});
        std::vector<double> filtered;
        for (std::size_t i : pareto_filter_indices(set)) {
            const auto row = set[i];
            filtered.insert(filtered.end(), row.begin(), row.end());
        }
        root = std::move(filtered);
        kept = root.size() / d;
    }

    Recursion recursion(cfg, d, kept);
    const double volume = recursion.solve(lower, upper, root, 0);
    HvResult result;
    result.stats = recursion.stats();
    if (!cfg.cut_threshold) result.hypervolume = volume;
    return result;
}

RunStats count_tree(const PointSet& points, const Hypercuboid& box, const EngineConfig& cfg) {
    if (!cfg.cut_threshold) throw UsageError("count_tree requires a cut threshold");
    return hypervolume(points, box, cfg).stats;
}

}  // namespace qhv
