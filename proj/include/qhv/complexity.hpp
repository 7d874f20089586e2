#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

// Akra-Bazzi exponents of the divide-and-conquer recurrences
//   T(n) = sum_k a_k T(n / b_k) + g(n)
// that model the two splitting schemes. The exponent p solves
//   sum_k a_k / b_k^p = 1.
namespace qhv::complexity {

struct RecurrenceTerm {
    double a;  ///< number of subproblems of this kind, > 0
    double b;  ///< size shrink factor, > 1
};

struct RecurrenceModel {
    std::vector<RecurrenceTerm> terms;
    std::string label;

    /// Throws DomainError if a term has a <= 0 or b <= 1, or there are none.
    void validate() const;
    /// sum_k a_k b_k^-p - 1
    double characteristic(double p) const;
};

struct ExponentResult {
    double p_star = 0.0;
    double residual = 0.0;
    std::uint64_t iterations = 0;
};

inline constexpr double kExponentTolerance = 1e-12;
inline constexpr std::uint64_t kMaxBisectionSteps = 200;
inline constexpr double kResidualBound = 1e-10;

/// Bisection on [0, P], P doubled until the characteristic function goes
/// negative. Throws DomainError when sum a_k < 1 (no nonnegative root).
ExponentResult solve_exponent(const RecurrenceModel& model);

/// Binomial coefficient in integer arithmetic, d <= 64.
std::uint64_t binomial(unsigned n, unsigned k);

/// Schema split, all projected points removed: a_k = 1,
/// b_1 = (2^d-2)/(2^(d-1)-1), b_k = (2^d-2)/2^(d-k). Exponent 1.
RecurrenceModel model_qhv2_best(std::size_t d);
/// Basic-hypercuboid split, all projected points removed:
/// a_k = C(d,k), b_k = 2^d-2, k = 1..d-1. Exponent 1.
RecurrenceModel model_qhv_best(std::size_t d);
/// Schema split keeping every projected point: d terms with a = 1, b = 2.
/// Exponent log2(d).
RecurrenceModel model_qhv2_intermediate(std::size_t d);
/// Basic-hypercuboid split keeping every projected point:
/// a_k = C(d,k), b_k = (2^d-2)/(2^(d-k)-1), k = 1..d-1.
RecurrenceModel model_qhv_intermediate(std::size_t d);
/// Uniform spread over all 2^d basic hypercuboids:
/// a_k = C(d,k), b_k = 2^k, k = 1..d.
RecurrenceModel model_qhv_approx(std::size_t d);

/// A fraction C of the projected points survives.
///   b_1 = (2^d-2)/(2^(d-1)-1)
///   b_k = (2^d-2)/(2^(d-k) + C(2^(d-1) - 2^(d-k) - 1)),  k = 2..d
/// C = 0 gives the best case and C = 1 the intermediate case.
RecurrenceModel model_qhv2_fraction(std::size_t d, double c);

/// A fraction C of the projected points survives:
///   a_k = C(d,k), b_k = (2^d-2)/(1 + C(2^(d-k) - 2)),  k = 1..d-1
/// The all-ones vector dominates the pivot and holds no points, so it has no
/// term. C = 0 gives the best case and C = 1 the intermediate case.
RecurrenceModel model_qhv_fraction(std::size_t d, double c);

/// -log2(2^(1/d) - 1), the exponent of model_qhv_approx in closed form.
double approx_qhv_exponent(std::size_t d);

/// approx_qhv_exponent(d) - log2(d); positive for every d >= 2.
double approx_exponent_gap(std::size_t d);

}  // namespace qhv::complexity
