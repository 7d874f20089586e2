#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace qhv {

/// One d-dimensional objective vector, d >= 2, all coordinates finite.
/// Objectives are maximized.
class Point {
public:
    explicit Point(std::vector<double> coords);
    Point(std::initializer_list<double> coords);
    explicit Point(std::span<const double> coords);

    std::size_t dim() const noexcept { return coords_.size(); }
    double operator[](std::size_t j) const noexcept { return coords_[j]; }
    std::span<const double> coords() const noexcept { return coords_; }
    operator std::span<const double>() const noexcept { return coords_; }

    /// All coordinates equal to `value`.
    static Point filled(std::size_t dim, double value);

    bool operator==(const Point&) const = default;

private:
    std::vector<double> coords_;
};

/// Axis-parallel box [lower, upper]. Zero-width sides are allowed.
class Hypercuboid {
public:
    Hypercuboid(Point lower, Point upper);

    const Point& lower() const noexcept { return lower_; }
    const Point& upper() const noexcept { return upper_; }
    std::size_t dim() const noexcept { return lower_.dim(); }
    double volume() const;

    /// [0,1]^d
    static Hypercuboid unit(std::size_t dim);

private:
    Point lower_;
    Point upper_;
};

/// Ordered sequence of points of one dimension, stored row-major in a flat buffer.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::size_t dim);
    PointSet(std::initializer_list<Point> points);
    explicit PointSet(std::span<const Point> points);

    /// Validates dimension and finiteness. The first point of a
    /// default-constructed set fixes its dimension.
    void push_back(std::span<const double> coords);
    void reserve(std::size_t n) { data_.reserve(n * dim_); }

    std::size_t size() const noexcept { return dim_ == 0 ? 0 : data_.size() / dim_; }
    std::size_t dim() const noexcept { return dim_; }
    bool empty() const noexcept { return data_.empty(); }

    std::span<const double> operator[](std::size_t i) const noexcept {
        return {data_.data() + i * dim_, dim_};
    }
    Point point(std::size_t i) const { return Point((*this)[i]); }
    std::span<const double> data() const noexcept { return data_; }

    bool operator==(const PointSet&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<double> data_;
};

/// a_j >= b_j for all j and a_j > b_j for some j.
bool dominates(std::span<const double> a, std::span<const double> b);

/// a_j >= b_j for all j.
bool weakly_dominates(std::span<const double> a, std::span<const double> b);

/// Volume of [r, s]: prod_j max(0, s_j - r_j).
double box_volume(std::span<const double> s, std::span<const double> r);

/// Pointwise min(s_j, upper_j).
Point clip(std::span<const double> s, std::span<const double> upper);

/// Points not dominated by any other point, in input order; of several
/// equal points only the first is kept. Quadratic pairwise comparison.
PointSet pareto_filter(const PointSet& points);

/// Indices kept by pareto_filter. Adds the number of pairwise dominance
/// tests performed to `comparisons` when given.
std::vector<std::size_t> pareto_filter_indices(const PointSet& points,
                                               std::uint64_t* comparisons = nullptr);

}  // namespace qhv
