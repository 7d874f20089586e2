// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qhv/complexity.hpp"
#include "qhv/engine.hpp"
#include "qhv/instances.hpp"
#include "qhv/oracle.hpp"
#include "test_support.hpp"

using namespace qhv;
namespace cx = qhv::complexity;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (pass) detail << why;
        pass = false;
    }
};

constexpr SplitScheme kSchemes[] = {SplitScheme::Qhv, SplitScheme::Qhv2};
constexpr Family kFamilies[] = {Family::Linear, Family::Concave, Family::Convex,
                                Family::Spherical};

double hv(const PointSet& pts, const Hypercuboid& box, SplitScheme s) {
    EngineConfig cfg;
    cfg.scheme = s;
    return *hypervolume(pts, box, cfg).hypervolume;
}

double rel_err(double a, double b) {
    return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-300});
}

// Oracle equivalence over 200 randomized instances.
void oracle_equivalence(Outcome& o) {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t d = 2 + i % 7;
        const std::size_t n = 1 + (i * 7) % 12;
        const InstanceSpec spec{kFamilies[i % 4], d, n, 1000u + static_cast<std::uint64_t>(i), {}};
        const auto pts = generate(spec);
        const double iex = oracle::inclusion_exclusion(pts, Point::filled(d, 0.0));
        for (auto s : kSchemes) {
            const double e = rel_err(hv(pts, Hypercuboid::unit(d), s), iex);
            worst = std::max(worst, e);
            if (e > 1e-9) {
                o.fail("instance " + std::to_string(i) + " scheme " + to_string(s));
            }
        }
    }
    o.detail << " max rel err " << worst;
}

void sweep_equivalence(Outcome& o) {
    double worst = 0.0;
    std::mt19937_64 rng(2);
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = 20 * static_cast<std::size_t>(i + 1);
        // Alternate generated fronts with uniform clouds that hold dominated points.
        const PointSet pts = i % 5 == 4 ? test::uniform_cloud(rng, 2, n)
                                        : generate({kFamilies[i % 4], 2, n, 500u + i, {}});
        const double sweep = oracle::sweep_2d(pts, Point{0, 0});
        for (auto s : kSchemes) {
            const double e = rel_err(hv(pts, Hypercuboid::unit(2), s), sweep);
            worst = std::max(worst, e);
            if (e > 1e-9) o.fail("instance " + std::to_string(i) + " scheme " + to_string(s));
        }
    }
    o.detail << " max rel err " << worst;
}

void table1(Outcome& o) {
    struct Row {
        std::size_t d;
        double exact, approx;
    };
    const Row rows[] = {{2, 1.0, 1.2715},     {4, 2.2942, 2.4019}, {6, 2.9920, 3.0295},
                        {8, 3.4543, 3.4658},  {10, 3.7971, 3.8004}, {12, 4.0709, 4.0718}};
    double worst = 0.0;
    for (const auto& r : rows) {
        const double exact = cx::solve_exponent(cx::model_qhv_intermediate(r.d)).p_star;
        const double approx = cx::approx_qhv_exponent(r.d);
        worst = std::max({worst, std::fabs(exact - r.exact), std::fabs(approx - r.approx)});
        if (std::fabs(exact - r.exact) > 5e-4) o.fail("exact d=" + std::to_string(r.d));
        if (std::fabs(approx - r.approx) > 5e-4) o.fail("approx d=" + std::to_string(r.d));
    }
    o.detail << " 12 values, max abs err " << worst;
}

void table2(Outcome& o) {
    struct Row {
        std::size_t d;
        double c, qhv2, qhv;
    };
    const Row rows[] = {
        {4, 0.9, 1.8635, 2.0928},  {4, 0.5, 1.4279, 1.5071},  {4, 0.1, 1.0837, 1.0957},
        {12, 0.9, 3.1897, 3.6731}, {12, 0.5, 2.0706, 2.5321}, {12, 0.1, 1.2548, 1.5445},
        {20, 0.9, 3.8092, 4.3628}, {20, 0.5, 2.3820, 3.0746}, {20, 0.1, 1.3563, 1.9701},
    };
    double worst = 0.0;
    for (const auto& r : rows) {
        const double p2 = cx::solve_exponent(cx::model_qhv2_fraction(r.d, r.c)).p_star;
        const double p1 = cx::solve_exponent(cx::model_qhv_fraction(r.d, r.c)).p_star;
        worst = std::max({worst, std::fabs(p2 - r.qhv2), std::fabs(p1 - r.qhv)});
        const std::string tag = "d=" + std::to_string(r.d) + " C=" + std::to_string(r.c);
        if (std::fabs(p2 - r.qhv2) > 5e-4) o.fail("qhv2 " + tag);
        if (std::fabs(p1 - r.qhv) > 5e-4) o.fail("qhv " + tag);
    }
    o.detail << " 18 values, max abs err " << worst;
}

void hypothesis_grid(Outcome& o) {
    double smallest = 1e300;
    for (std::size_t d = 3; d <= 20; ++d) {
        for (int k = 1; k <= 19; ++k) {
            const double c = 0.05 * k;
            const double gap = cx::solve_exponent(cx::model_qhv_fraction(d, c)).p_star -
                               cx::solve_exponent(cx::model_qhv2_fraction(d, c)).p_star;
            smallest = std::min(smallest, gap);
            if (!(gap > 0.0)) o.fail("d=" + std::to_string(d) + " C=" + std::to_string(c));
        }
    }
    o.detail << " 342 grid points, smallest gap " << smallest;
}

void approx_exceeds_log2(Outcome& o) {
    double smallest = 1e300;
    for (std::size_t d = 2; d <= 64; ++d) {
        const double g = cx::approx_exponent_gap(d);
        smallest = std::min(smallest, g);
        if (!(g > 0.0)) o.fail("d=" + std::to_string(d));
    }
    o.detail << " smallest gap " << smallest;
}

void node_counts(Outcome& o) {
    double nodes[2] = {0, 0}, leaves[2] = {0, 0};
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto pts = generate({Family::Spherical, 8, 200, seed, {}});
        for (int s = 0; s < 2; ++s) {
            EngineConfig cfg;
            cfg.scheme = kSchemes[s];
            cfg.cut_threshold = 10;
            const auto st = count_tree(pts, Hypercuboid::unit(8), cfg);
            nodes[s] += static_cast<double>(st.internal_nodes) / 10.0;
            leaves[s] += static_cast<double>(st.leaves) / 10.0;
        }
    }
    if (!(nodes[1] < nodes[0])) o.fail("internal nodes not lower for qhv2");
    if (!(leaves[1] < leaves[0])) o.fail("leaves not lower for qhv2");
    o.detail << " d=8 n=200 cut=10: nodes qhv " << nodes[0] << " qhv2 " << nodes[1]
             << ", leaves qhv " << leaves[0] << " qhv2 " << leaves[1];

    for (std::size_t d : {4, 6}) {
        double comps[2] = {0, 0};
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const auto pts = generate({Family::Spherical, d, 50, seed, {}});
            for (int s = 0; s < 2; ++s) {
                EngineConfig cfg;
                cfg.scheme = kSchemes[s];
                comps[s] += static_cast<double>(
                                hypervolume(pts, Hypercuboid::unit(d), cfg).stats.dominance_comparisons) /
                            10.0;
            }
        }
        if (!(comps[0] > comps[1])) o.fail("comparisons not higher for qhv at d=" + std::to_string(d));
        o.detail << "; d=" << d << " comparisons qhv " << comps[0] << " qhv2 " << comps[1];
    }
}

void monte_carlo(Outcome& o) {
    const auto pts = generate({Family::Spherical, 8, 300, 8, {}});
    const auto box = Hypercuboid::unit(8);
    const double exact = hv(pts, box, SplitScheme::Qhv2);
    const auto mc = oracle::monte_carlo(pts, box, 1'000'000, 8);
    const double z = std::fabs(exact - mc.estimate) / mc.std_error;
    if (!(z <= 4.0)) o.fail("outside 4 standard errors");
    o.detail << " exact " << exact << " estimate " << mc.estimate << " +- " << mc.std_error
             << " (z=" << z << ")";
}

// Each property over >= 100 random cases.
void invariant_suite(Outcome& o) {
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int cases = 0;

    auto instance = [&](int i, std::size_t& d) {
        d = 2 + static_cast<std::size_t>(i) % 5;
        const std::size_t n = 2 + static_cast<std::size_t>(i) % 25;
        return i % 3 == 0 ? test::lattice_cloud(rng, d, n, 6) : test::uniform_cloud(rng, d, n);
    };

    for (int i = 0; i < 100; ++i, ++cases) {
        std::size_t d;
        const auto pts = instance(i, d);
        const auto box = Hypercuboid::unit(d);
        for (auto s : kSchemes) {
            const double base = hv(pts, box, s);

            // Monotonicity under insertion.
            PointSet more = pts;
            std::vector<double> extra(d);
            for (auto& x : extra) x = u(rng);
            more.push_back(extra);
            if (hv(more, box, s) < base * (1.0 - 1e-12)) o.fail("monotonicity");

            // Appending a dominated point.
            PointSet dom = pts;
            std::vector<double> below(pts[i % pts.size()].begin(), pts[i % pts.size()].end());
            for (auto& x : below) x *= u(rng);
            dom.push_back(below);
            if (rel_err(hv(dom, box, s), base) > 1e-12) o.fail("dominated-point invariance");

            // Permutation.
            if (rel_err(hv(test::shuffled(pts, rng), box, s), base) > 1e-12) {
                o.fail("permutation tolerance");
            }

            // Per-axis scaling of points and both corners.
            const std::size_t axis = static_cast<std::size_t>(i) % d;
            const double lambda = 0.25 + 3.0 * u(rng);
            PointSet scaled(d);
            std::vector<double> row(d);
            for (std::size_t k = 0; k < pts.size(); ++k) {
                for (std::size_t j = 0; j < d; ++j) row[j] = pts[k][j];
                row[axis] *= lambda;
                scaled.push_back(row);
            }
            std::vector<double> up(d, 1.0);
            up[axis] = lambda;
            const Hypercuboid scaled_box(Point::filled(d, 0.0), Point(up));
            if (rel_err(hv(scaled, scaled_box, s), lambda * base) > 1e-12) {
                o.fail("scale invariance");
            }
        }
        // Scheme agreement.
        if (rel_err(hv(pts, box, SplitScheme::Qhv), hv(pts, box, SplitScheme::Qhv2)) > 1e-9) {
            o.fail("scheme agreement");
        }
    }

    // Scheme agreement at the upper end, n <= 50, d <= 8.
    for (int i = 0; i < 100; ++i, ++cases) {
        const std::size_t d = 2 + static_cast<std::size_t>(i) % 7;
        const std::size_t n = 10 + static_cast<std::size_t>(i) % 41;
        const auto pts = test::uniform_cloud(rng, d, n);
        const auto box = Hypercuboid::unit(d);
        if (rel_err(hv(pts, box, SplitScheme::Qhv), hv(pts, box, SplitScheme::Qhv2)) > 1e-9) {
            o.fail("scheme agreement n<=50");
        }
    }

    // Child counts and sub-box partitions.
    for (int i = 0; i < 100; ++i, ++cases) {
        const std::size_t d = 2 + static_cast<std::size_t>(i) % 7;
        std::vector<double> lo(d), hi(d), pv(d);
        for (std::size_t j = 0; j < d; ++j) {
            lo[j] = u(rng) - 0.5;
            hi[j] = lo[j] + 0.1 + u(rng);
            pv[j] = lo[j] + (hi[j] - lo[j]) * u(rng);
        }
        const Hypercuboid box{Point(lo), Point(hi)};
        const Point pivot(pv);
        const auto q2 = split_qhv2(box, pivot, {});
        const auto q1 = split_qhv(box, pivot, {});
        if (q2.size() != d) o.fail("qhv2 child count");
        if (q1.size() != (std::size_t{1} << d) - 2) o.fail("qhv child count");

        const double whole = box.volume();
        const double dominated = box_volume(pivot, box.lower());
        const double dominating = box_volume(box.upper(), pivot);
        double sum2 = dominated;
        for (const auto& k : q2) sum2 += k.box.volume();
        double sum1 = dominated + dominating;
        for (const auto& k : q1) sum1 += k.box.volume();
        if (rel_err(sum2, whole) > 1e-12) o.fail("qhv2 partition");
        if (rel_err(sum1, whole) > 1e-12) o.fail("qhv partition");
    }
    o.detail << " " << cases << " cases, 4 properties per scheme + counts + partitions";
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void(Outcome&)> run;
    };
    const Criterion criteria[] = {
        {"oracle equivalence (200 instances, both schemes vs inclusion-exclusion, rel 1e-9)",
         oracle_equivalence},
        {"2-D sweep equivalence (50 instances, n <= 1000, rel 1e-9)", sweep_equivalence},
        {"exact/approximate exponent table (12 values, +-5e-4)", table1},
        {"fraction-model exponent table (18 values, +-5e-4)", table2},
        {"qhv2 exponent below qhv on d=3..20 x C=0.05..0.95", hypothesis_grid},
        {"approximate exponent exceeds log2 d for d=2..64", approx_exceeds_log2},
        {"node, leaf and comparison counts lower for qhv2 on average", node_counts},
        {"Monte Carlo sanity (d=8, n=300, 1e6 samples, 4 std errors)", monte_carlo},
        {"invariant suite (>= 100 cases per property)", invariant_suite},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %s:%s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.name,
                    o.detail.str().c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
                std::size(criteria));
    return failures == 0 ? 0 : 1;
}
