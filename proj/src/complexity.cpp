#include "qhv/complexity.hpp"

#include <cmath>

#include "qhv/errors.hpp"

namespace qhv::complexity {

namespace {

void check_dim(std::size_t d) {
    if (d < 2 || d > 64) throw UsageError("model dimension must lie in [2, 64]");
}

void check_fraction(double c) {
    if (!(c >= 0.0 && c <= 1.0)) throw UsageError("fraction C must lie in [0, 1]");
}

double pow2(std::size_t e) { return std::ldexp(1.0, static_cast<int>(e)); }

std::string label_of(const char* name, std::size_t d) {
    return std::string(name) + " d=" + std::to_string(d);
}

std::string label_of(const char* name, std::size_t d, double c) {
    return label_of(name, d) + " C=" + std::to_string(c);
}

}  // namespace

void RecurrenceModel::validate() const {
    if (terms.empty()) throw DomainError("recurrence model '" + label + "' has no terms");
    for (const auto& t : terms) {
        if (!(t.a > 0.0) || !(t.b > 1.0) || !std::isfinite(t.a) || !std::isfinite(t.b)) {
            throw DomainError("recurrence model '" + label + "' needs a_k > 0 and b_k > 1");
        }
    }
}

double RecurrenceModel::characteristic(double p) const {
    double sum = 0.0;
    for (const auto& t : terms) sum += t.a * std::pow(t.b, -p);
    return sum - 1.0;
}

ExponentResult solve_exponent(const RecurrenceModel& model) {
    model.validate();
    const double at_zero = model.characteristic(0.0);
    if (at_zero < 0.0) {
        throw DomainError("sum of a_k is below 1; no nonnegative exponent for '" +
                          model.label + "'");
    }
    if (at_zero == 0.0) return {0.0, 0.0, 0};

    double lo = 0.0;
    double hi = 1.0;
    while (model.characteristic(hi) >= 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e6) throw DomainError("exponent bracket diverged for '" + model.label + "'");
    }

    ExponentResult out;
    while (hi - lo > kExponentTolerance && out.iterations < kMaxBisectionSteps) {
        const double mid = 0.5 * (lo + hi);
        if (model.characteristic(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        ++out.iterations;
    }
    out.p_star = 0.5 * (lo + hi);
    out.residual = model.characteristic(out.p_star);
    if (std::fabs(out.residual) > kResidualBound) {
        throw DomainError("bisection residual too large for '" + model.label + "'");
    }
    return out;
}

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (n > 64) throw UsageError("binomial supports n <= 64");
    // One Pascal row at a time; every entry up to C(64, 32) fits in 64 bits.
    std::vector<std::uint64_t> row(n + 1, 0);
    row[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i; j > 0; --j) row[j] += row[j - 1];
    }
    return row[k];
}

RecurrenceModel model_qhv2_best(std::size_t d) { return model_qhv2_fraction(d, 0.0); }

RecurrenceModel model_qhv_best(std::size_t d) {
    check_dim(d);
    RecurrenceModel m{{}, label_of("qhv best", d)};
    for (std::size_t k = 1; k < d; ++k) {
        m.terms.push_back({static_cast<double>(binomial(d, k)), pow2(d) - 2.0});
    }
    return m;
}

RecurrenceModel model_qhv2_intermediate(std::size_t d) {
    check_dim(d);
    return {std::vector<RecurrenceTerm>(d, {1.0, 2.0}), label_of("qhv2 intermediate", d)};
}

RecurrenceModel model_qhv_intermediate(std::size_t d) {
    check_dim(d);
    RecurrenceModel m{{}, label_of("qhv intermediate", d)};
    for (std::size_t k = 1; k < d; ++k) {
        m.terms.push_back(
            {static_cast<double>(binomial(d, k)), (pow2(d) - 2.0) / (pow2(d - k) - 1.0)});
    }
    return m;
}

RecurrenceModel model_qhv_approx(std::size_t d) {
    check_dim(d);
    RecurrenceModel m{{}, label_of("qhv approx", d)};
    for (std::size_t k = 1; k <= d; ++k) {
        m.terms.push_back({static_cast<double>(binomial(d, k)), pow2(k)});
    }
    return m;
}

RecurrenceModel model_qhv2_fraction(std::size_t d, double c) {
    check_dim(d);
    check_fraction(c);
    const double span = pow2(d) - 2.0;
    RecurrenceModel m{{}, label_of("qhv2 fraction", d, c)};
    m.terms.push_back({1.0, span / (pow2(d - 1) - 1.0)});
    for (std::size_t k = 2; k <= d; ++k) {
        const double direct = pow2(d - k);
        m.terms.push_back({1.0, span / (direct + c * (pow2(d - 1) - direct - 1.0))});
    }
    m.validate();
    return m;
}

RecurrenceModel model_qhv_fraction(std::size_t d, double c) {
    check_dim(d);
    check_fraction(c);
    const double span = pow2(d) - 2.0;
    RecurrenceModel m{{}, label_of("qhv fraction", d, c)};
    for (std::size_t k = 1; k < d; ++k) {
        m.terms.push_back(
            {static_cast<double>(binomial(d, k)), span / (1.0 + c * (pow2(d - k) - 2.0))});
    }
    m.validate();
    return m;
}

double approx_qhv_exponent(std::size_t d) {
    check_dim(d);
    return -std::log2(std::exp2(1.0 / static_cast<double>(d)) - 1.0);
}

double approx_exponent_gap(std::size_t d) {
    return approx_qhv_exponent(d) - std::log2(static_cast<double>(d));
}

}  // namespace qhv::complexity
