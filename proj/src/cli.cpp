#include "qhv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "qhv/bench.hpp"
#include "qhv/complexity.hpp"
#include "qhv/engine.hpp"
#include "qhv/errors.hpp"
#include "qhv/instances.hpp"

namespace qhv::cli {

namespace {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        const auto e = item.find_last_not_of(" \t");
        out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

template <typename T>
T parse_number(const std::string& token, const char* flag) {
    T value{};
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw UsageError(std::string(flag) + ": cannot parse '" + token + "'");
    }
    return value;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* flag) {
    std::vector<T> out;
    for (const auto& token : split_list(text)) out.push_back(parse_number<T>(token, flag));
    if (out.empty()) throw UsageError(std::string(flag) + ": empty list");
    return out;
}

SplitScheme parse_scheme(const std::string& name) {
    if (name == "qhv") return SplitScheme::Qhv;
    if (name == "qhv2") return SplitScheme::Qhv2;
    throw UsageError("unknown scheme '" + name + "' (expected qhv or qhv2)");
}

std::string format_g(double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string format_fixed(double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

// Drops digits past `digits` instead of rounding. The slack absorbs
// bisection error so an exact 1 does not print as 0.9999.
std::string format_truncated(double v, int digits) {
    const double scale = std::pow(10.0, digits);
    return format_fixed(std::floor(v * scale + 1e-6) / scale, digits);
}

struct ComputeArgs {
    std::string input;
    std::string scheme = "qhv2";
    std::string ref;
    std::string upper;
    bool minimize = false;
    bool stats = false;
    std::size_t small_set = 2;
    bool explicit_filter = false;
};

int cmd_compute(const ComputeArgs& a, std::ostream& out) {
    const SplitScheme scheme = parse_scheme(a.scheme);
    PointSet raw = load(a.input);
    const std::size_t d = raw.dim();
    const double sign = a.minimize ? -1.0 : 1.0;

    PointSet points(d);
    points.reserve(raw.size());
    std::vector<double> row(d);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        for (std::size_t j = 0; j < d; ++j) row[j] = sign * raw[i][j];
        points.push_back(row);
    }

    auto corner = [&](const std::string& text, const char* flag) {
        auto values = parse_list<double>(text, flag);
        if (values.size() != d) {
            throw UsageError(std::string(flag) + " has " + std::to_string(values.size()) +
                             " values, input has dimension " + std::to_string(d));
        }
        for (auto& v : values) v *= sign;
        return values;
    };
    const std::vector<double> lower =
        a.ref.empty() ? std::vector<double>(d, 0.0) : corner(a.ref, "--ref");
    std::vector<double> upper;
    if (a.upper.empty()) {
        upper = lower;
        for (std::size_t i = 0; i < points.size(); ++i) {
            for (std::size_t j = 0; j < d; ++j) upper[j] = std::max(upper[j], points[i][j]);
        }
    } else {
        upper = corner(a.upper, "--upper");
    }

    EngineConfig cfg;
    cfg.scheme = scheme;
    cfg.small_set_threshold = a.small_set;
    cfg.explicit_pareto_filter = a.explicit_filter;
    const auto res = hypervolume(points, Hypercuboid(Point(lower), Point(upper)), cfg);
    out << format_g(*res.hypervolume, 15) << '\n';
    if (a.stats) {
        const auto& s = res.stats;
        out << "internal_nodes " << s.internal_nodes << '\n'
            << "leaves " << s.leaves << '\n'
            << "max_depth " << s.max_depth << '\n'
            << "dominance_comparisons " << s.dominance_comparisons << '\n'
            << "pivot_selections " << s.pivot_selections << '\n';
    }
    return kExitOk;
}

struct GenerateArgs {
    std::string family;
    long long d = 0;
    long long n = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_generate(const GenerateArgs& a) {
    const Family family = parse_family(a.family);
    if (family == Family::File) throw UsageError("--family file cannot be generated");
    if (a.d < 2) throw UsageError("--d must be at least 2");
    if (a.n < 1) throw UsageError("--n must be at least 1");
    const InstanceSpec spec{family, static_cast<std::size_t>(a.d),
                            static_cast<std::size_t>(a.n), a.seed, std::nullopt};
    save(generate(spec), a.out);
    return kExitOk;
}

struct BenchArgs {
    std::string families;
    std::string dims;
    std::string sizes;
    std::string seeds = "1,2,3,4,5,6,7,8,9,10";
    std::string schemes = "both";
    long long cut = 0;
    double timeout = 0.0;
    std::size_t jobs = 1;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    bench::BenchPlan plan;
    for (const auto& name : split_list(a.families)) {
        const Family f = parse_family(name);
        if (f == Family::File) throw UsageError("--families: file instances are not generated");
        plan.families.push_back(f);
    }
    if (plan.families.empty()) throw UsageError("--families: empty list");
    plan.dims = parse_list<std::size_t>(a.dims, "--dims");
    for (auto d : plan.dims) {
        if (d < 2) throw UsageError("--dims: dimension must be at least 2");
    }
    plan.sizes = parse_list<std::size_t>(a.sizes, "--sizes");
    for (auto n : plan.sizes) {
        if (n < 1) throw UsageError("--sizes: size must be at least 1");
    }
    plan.seeds = parse_list<std::uint64_t>(a.seeds, "--seeds");
    if (a.schemes == "both") {
        plan.schemes = {SplitScheme::Qhv, SplitScheme::Qhv2};
    } else {
        for (const auto& s : split_list(a.schemes)) plan.schemes.push_back(parse_scheme(s));
        if (plan.schemes.empty()) throw UsageError("--schemes: empty list");
    }
    if (a.cut < 0) throw UsageError("--cut must be at least 1");
    if (a.cut > 0) plan.cut = static_cast<std::size_t>(a.cut);
    if (a.timeout < 0.0) throw UsageError("--timeout must be positive");
    if (a.timeout > 0.0) plan.timeout_seconds = a.timeout;
    plan.jobs = std::max<std::size_t>(1, a.jobs);

    const auto records = bench::run(plan);
    bench::write_csv(records, out);
    const bool all_failed = std::all_of(records.begin(), records.end(),
                                        [](const auto& r) { return r.timeout; });
    return all_failed ? kExitFailure : kExitOk;
}

struct ExponentArgs {
    std::string dims;
    std::string fractions;
};

int cmd_exponent(const ExponentArgs& a, std::ostream& out) {
    namespace cx = complexity;
    const auto dims = parse_list<std::size_t>(a.dims, "--dims");
    for (auto d : dims) {
        if (d < 2 || d > 64) throw UsageError("--dims: dimension must lie in [2, 64]");
    }
    if (a.fractions.empty()) {
        // Truncated to four decimals, the convention of the published exact/approximate table.
        out << "d    p_exact  p_approx\n";
        for (auto d : dims) {
            const double exact = cx::solve_exponent(cx::model_qhv_intermediate(d)).p_star;
            const double approx = cx::approx_qhv_exponent(d);
            char line[96];
            std::snprintf(line, sizeof line, "%-4zu %7s  %8s\n", d,
                          format_truncated(exact, 4).c_str(), format_truncated(approx, 4).c_str());
            out << line;
        }
        return kExitOk;
    }
    const auto fractions = parse_list<double>(a.fractions, "--fractions");
    for (double c : fractions) {
        if (!(c >= 0.0 && c <= 1.0)) throw UsageError("--fractions: C must lie in [0, 1]");
    }
    out << "d    C      p_qhv2   p_qhv\n";
    for (auto d : dims) {
        for (double c : fractions) {
            const double p2 = cx::solve_exponent(cx::model_qhv2_fraction(d, c)).p_star;
            const double p1 = cx::solve_exponent(cx::model_qhv_fraction(d, c)).p_star;
            char line[96];
            std::snprintf(line, sizeof line, "%-4zu %-6s %7s  %7s\n", d, format_g(c, 6).c_str(),
                          format_fixed(p2, 4).c_str(), format_fixed(p1, 4).c_str());
            out << line;
        }
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact hypervolume by quick-hypervolume recursion"};
    app.name("qhv");
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Hypervolume of a point file");
    c->add_option("--input", compute.input, "Point file")->required();
    c->add_option("--scheme", compute.scheme, "qhv or qhv2")->capture_default_str();
    c->add_option("--ref", compute.ref, "Reference (lower) corner, comma-separated");
    c->add_option("--upper", compute.upper, "Upper corner, comma-separated");
    c->add_flag("--minimize", compute.minimize, "Negate inputs (minimized objectives)");
    c->add_flag("--stats", compute.stats, "Print recursion statistics");
    c->add_option("--small-set", compute.small_set, "Direct evaluation threshold (2..12)")
        ->capture_default_str();
    c->add_flag("--explicit-filter", compute.explicit_filter,
                "Pareto-filter every subproblem");

    GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "Write a seeded instance file");
    g->add_option("--family", gen.family, "linear, concave, convex or spherical")->required();
    g->add_option("--d", gen.d, "Dimension")->required();
    g->add_option("--n", gen.n, "Number of points")->required();
    g->add_option("--seed", gen.seed, "Seed")->capture_default_str();
    g->add_option("--out", gen.out, "Output path")->required();

    BenchArgs bench_args;
    auto* b = app.add_subcommand("bench", "Node-count and timing suite, CSV on stdout");
    b->add_option("--families", bench_args.families, "Comma-separated families")->required();
    b->add_option("--dims", bench_args.dims, "Comma-separated dimensions")->required();
    b->add_option("--sizes", bench_args.sizes, "Comma-separated point counts")->required();
    b->add_option("--seeds", bench_args.seeds, "Comma-separated seeds")->capture_default_str();
    b->add_option("--schemes", bench_args.schemes, "both, or a list of qhv/qhv2")
        ->capture_default_str();
    b->add_option("--cut", bench_args.cut, "Recursion cut threshold (stats only)");
    b->add_option("--timeout", bench_args.timeout, "Seconds per run");
    b->add_option("--jobs", bench_args.jobs, "Worker threads")->capture_default_str();

    ExponentArgs expo;
    auto* e = app.add_subcommand("exponent", "Akra-Bazzi exponent tables");
    e->add_option("--dims", expo.dims, "Comma-separated dimensions")->required();
    e->add_option("--fractions", expo.fractions, "Comma-separated preserved fractions C");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << '\n';
        const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return kExitUsage;
    }

    try {
        if (c->parsed()) return cmd_compute(compute, out);
        if (g->parsed()) return cmd_generate(gen);
        if (b->parsed()) return cmd_bench(bench_args, out);
        if (e->parsed()) return cmd_exponent(expo, out);
    } catch (const UsageError& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace qhv::cli
