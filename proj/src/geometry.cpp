#include "qhv/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qhv/errors.hpp"

namespace qhv {

namespace {

void check_coords(std::span<const double> coords) {
    if (coords.size() < 2) {
        throw UsageError("point dimension must be at least 2, got " +
                         std::to_string(coords.size()));
    }
    for (double c : coords) {
        if (!std::isfinite(c)) throw UsageError("point coordinates must be finite");
    }
}

void check_same_dim(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw UsageError("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
    }
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) { check_coords(coords_); }

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

Point::Point(std::span<const double> coords)
    : Point(std::vector<double>(coords.begin(), coords.end())) {}

Point Point::filled(std::size_t dim, double value) {
    return Point(std::vector<double>(dim, value));
}

Hypercuboid::Hypercuboid(Point lower, Point upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    check_same_dim(lower_, upper_);
    for (std::size_t j = 0; j < lower_.dim(); ++j) {
        if (lower_[j] > upper_[j]) {
            throw UsageError("hypercuboid lower corner exceeds upper corner on axis " +
                             std::to_string(j));
        }
    }
}

double Hypercuboid::volume() const { return box_volume(upper_, lower_); }

Hypercuboid Hypercuboid::unit(std::size_t dim) {
    return {Point::filled(dim, 0.0), Point::filled(dim, 1.0)};
}

PointSet::PointSet(std::size_t dim) : dim_(dim) {
    if (dim < 2) throw UsageError("point dimension must be at least 2");
}

PointSet::PointSet(std::initializer_list<Point> points)
    : PointSet(std::span<const Point>(points.begin(), points.size())) {}

PointSet::PointSet(std::span<const Point> points) {
    if (!points.empty()) reserve(points.size());
    for (const auto& p : points) push_back(p);
}

void PointSet::push_back(std::span<const double> coords) {
    if (dim_ == 0) {
        check_coords(coords);
        dim_ = coords.size();
        data_.reserve(dim_);
    } else {
        if (coords.size() != dim_) {
            throw UsageError("dimension mismatch: set has " + std::to_string(dim_) +
                             ", point has " + std::to_string(coords.size()));
        }
        check_coords(coords);
    }
    data_.insert(data_.end(), coords.begin(), coords.end());
}

bool dominates(std::span<const double> a, std::span<const double> b) {
    check_same_dim(a, b);
    bool strict = false;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] < b[j]) return false;
        if (a[j] > b[j]) strict = true;
    }
    return strict;
}

bool weakly_dominates(std::span<const double> a, std::span<const double> b) {
    check_same_dim(a, b);
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] < b[j]) return false;
    }
    return true;
}

double box_volume(std::span<const double> s, std::span<const double> r) {
    check_same_dim(s, r);
    double v = 1.0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        const double side = s[j] - r[j];
        if (!(side > 0.0)) return 0.0;
        v *= side;
    }
    return v;
}

Point clip(std::span<const double> s, std::span<const double> upper) {
    check_same_dim(s, upper);
    std::vector<double> out(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) out[j] = std::min(s[j], upper[j]);
    return Point(std::move(out));
}

std::vector<std::size_t> pareto_filter_indices(const PointSet& points,
                                               std::uint64_t* comparisons) {
    const std::size_t n = points.size();
    std::vector<std::size_t> kept;
    std::uint64_t tests = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto p = points[i];
        bool drop = false;
        for (std::size_t k = 0; k < n && !drop; ++k) {
            if (k == i) continue;
            ++tests;
            const auto q = points[k];
            if (dominates(q, p)) {
                drop = true;
            } else if (k < i && std::equal(p.begin(), p.end(), q.begin())) {
                drop = true;
            }
        }
        if (!drop) kept.push_back(i);
    }
    if (comparisons != nullptr) *comparisons += tests;
    return kept;
}

PointSet pareto_filter(const PointSet& points) {
    if (points.empty()) return points;
    PointSet out(points.dim());
    for (std::size_t i : pareto_filter_indices(points)) out.push_back(points[i]);
    return out;
}

}  // namespace qhv
