#include "qhv/bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>
#include <thread>
#include <tuple>

#include "qhv/errors.hpp"

namespace qhv::bench {

namespace {

struct Job {
    std::size_t instance;  // index into the instance list
    SplitScheme scheme;
};

struct Instance {
    InstanceSpec spec;
    PointSet points;
};

BenchRecord run_one(const Instance& inst, SplitScheme scheme, const BenchPlan& plan) {
    BenchRecord rec;
    rec.family = inst.spec.family;
    rec.d = inst.spec.d;
    rec.n = inst.spec.n;
    rec.seed = inst.spec.seed;
    rec.scheme = scheme;
    rec.cut = plan.cut;

    EngineConfig cfg;
    cfg.scheme = scheme;
    cfg.cut_threshold = plan.cut;
    const auto box = Hypercuboid::unit(inst.spec.d);
    const auto start = std::chrono::steady_clock::now();
    if (plan.timeout_seconds) {
        cfg.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                   std::chrono::duration<double>(*plan.timeout_seconds));
    }
    try {
        const HvResult res = hypervolume(inst.points, box, cfg);
        const auto stop = std::chrono::steady_clock::now();
        rec.wall_time_s = std::chrono::duration<double>(stop - start).count();
        rec.internal_nodes = res.stats.internal_nodes;
        rec.leaves = res.stats.leaves;
        rec.hypervolume = res.hypervolume;
    } catch (const TimeoutError&) {
        rec.timeout = true;
        rec.wall_time_s = *plan.timeout_seconds;
    }
    return rec;
}

void put_optional(std::ostream& out, const std::optional<double>& v) {
    if (v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", *v);
        out << buf;
    }
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

std::vector<BenchRecord> run(const BenchPlan& plan) {
    if (plan.families.empty() || plan.dims.empty() || plan.sizes.empty() ||
        plan.seeds.empty() || plan.schemes.empty()) {
        throw UsageError("benchmark plan has an empty axis");
    }
    std::vector<Instance> instances;
    for (Family f : plan.families) {
        for (std::size_t d : plan.dims) {
            for (std::size_t n : plan.sizes) {
                for (std::uint64_t seed : plan.seeds) {
                    InstanceSpec spec{f, d, n, seed, std::nullopt};
                    instances.push_back({spec, generate(spec)});
                }
            }
        }
    }
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        for (SplitScheme s : plan.schemes) jobs.push_back({i, s});
    }

    std::vector<BenchRecord> records(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++) {
            records[k] = run_one(instances[jobs[k].instance], jobs[k].scheme, plan);
        }
    };
    const std::size_t threads = std::max<std::size_t>(1, std::min(plan.jobs, jobs.size()));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return records;
}

std::vector<BenchAverage> averages(const std::vector<BenchRecord>& records) {
    // Keyed by first appearance so the output follows record order.
    std::vector<BenchAverage> out;
    std::vector<std::size_t> counts;
    std::vector<bool> volume_complete;
    std::map<std::tuple<int, std::size_t, std::size_t, int>, std::size_t> slot;
    for (const auto& r : records) {
        const auto key = std::make_tuple(static_cast<int>(r.family), r.d, r.n,
                                         static_cast<int>(r.scheme));
        auto [it, fresh] = slot.try_emplace(key, out.size());
        if (fresh) {
            BenchAverage a;
            a.family = r.family;
            a.d = r.d;
            a.n = r.n;
            a.scheme = r.scheme;
            a.cut = r.cut;
            a.hypervolume = 0.0;
            out.push_back(a);
            counts.push_back(0);
            volume_complete.push_back(true);
        }
        auto& a = out[it->second];
        ++counts[it->second];
        a.internal_nodes += static_cast<double>(r.internal_nodes);
        a.leaves += static_cast<double>(r.leaves);
        a.wall_time_s += r.wall_time_s;
        if (r.timeout) ++a.timeouts;
        if (r.hypervolume) {
            *a.hypervolume += *r.hypervolume;
        } else {
            volume_complete[it->second] = false;
        }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double c = static_cast<double>(counts[i]);
        out[i].internal_nodes /= c;
        out[i].leaves /= c;
        out[i].wall_time_s /= c;
        if (volume_complete[i]) {
            *out[i].hypervolume /= c;
        } else {
            out[i].hypervolume.reset();
        }
    }
    return out;
}

void write_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
    out << kCsvHeader << '\n';
    const auto means = averages(records);
    auto cut_field = [](const std::optional<std::size_t>& cut) {
        return cut ? std::to_string(*cut) : std::string();
    };
    std::size_t mean_pos = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        out << to_string(r.family) << ',' << r.d << ',' << r.n << ',' << r.seed << ','
            << to_string(r.scheme) << ',' << cut_field(r.cut) << ',' << r.internal_nodes
            << ',' << r.leaves << ',' << fixed(r.wall_time_s, 6) << ',';
        put_optional(out, r.hypervolume);
        out << ',' << (r.timeout ? 1 : 0) << '\n';

        const bool block_ends = i + 1 == records.size() ||
                                records[i + 1].family != r.family || records[i + 1].d != r.d ||
                                records[i + 1].n != r.n;
        if (!block_ends) continue;
        for (; mean_pos < means.size(); ++mean_pos) {
            const auto& a = means[mean_pos];
            if (a.family != r.family || a.d != r.d || a.n != r.n) break;
            out << to_string(a.family) << ',' << a.d << ',' << a.n << ",mean,"
                << to_string(a.scheme) << ',' << cut_field(a.cut) << ','
                << fixed(a.internal_nodes, 2) << ',' << fixed(a.leaves, 2) << ','
                << fixed(a.wall_time_s, 6) << ',';
            put_optional(out, a.hypervolume);
            out << ',' << a.timeouts << '\n';
        }
    }
}

}  // namespace qhv::bench
