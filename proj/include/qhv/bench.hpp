#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qhv/engine.hpp"
#include "qhv/instances.hpp"

namespace qhv::bench {

struct BenchPlan {
    std::vector<Family> families;
    std::vector<std::size_t> dims;
    std::vector<std::size_t> sizes;
    std::vector<std::uint64_t> seeds;
    std::vector<SplitScheme> schemes;
    std::optional<std::size_t> cut;
    std::optional<double> timeout_seconds;
    /// Worker threads; rows come back in plan order whatever the value.
    std::size_t jobs = 1;
};

struct BenchRecord {
    Family family = Family::Spherical;
    std::size_t d = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    SplitScheme scheme = SplitScheme::Qhv2;
    std::optional<std::size_t> cut;
    std::uint64_t internal_nodes = 0;
    std::uint64_t leaves = 0;
    double wall_time_s = 0.0;
    std::optional<double> hypervolume;
    bool timeout = false;
};

/// Group means over seeds for one (family, d, n, scheme).
struct BenchAverage {
    Family family = Family::Spherical;
    std::size_t d = 0;
    std::size_t n = 0;
    SplitScheme scheme = SplitScheme::Qhv2;
    std::optional<std::size_t> cut;
    double internal_nodes = 0.0;
    double leaves = 0.0;
    double wall_time_s = 0.0;
    std::optional<double> hypervolume;
    std::size_t timeouts = 0;
};

/// Runs the full cross product, ordered by (family, d, n, seed, scheme).
/// Each instance is generated once and shared by its schemes; timing covers
/// the engine call only.
std::vector<BenchRecord> run(const BenchPlan& plan);

std::vector<BenchAverage> averages(const std::vector<BenchRecord>& records);

inline constexpr const char* kCsvHeader =
    "family,d,n,seed,scheme,cut,internal_nodes,leaves,wall_time_s,hypervolume,timeout";

/// Header, then each (family, d, n) block of records followed by its
/// per-scheme average rows (seed column "mean", timeout column = timed-out runs).
void write_csv(const std::vector<BenchRecord>& records, std::ostream& out);

}  // namespace qhv::bench
