#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "qhv/geometry.hpp"

namespace qhv {

enum class Family { Linear, Concave, Convex, Spherical, File };

const char* to_string(Family family);
/// Throws UsageError on an unknown name.
Family parse_family(std::string_view name);

struct InstanceSpec {
    Family family = Family::Spherical;
    std::size_t d = 2;
    std::size_t n = 1;
    std::uint64_t seed = 0;
    std::optional<std::filesystem::path> path;  // family == File only
};

/// Seeded front samples in [0,1]^d; the reference box is the unit box.
///
///   linear     d Exp(1) variates normalized to sum 1 (uniform on the simplex)
///   concave    d |N(0,1)| variates normalized to unit Euclidean norm
///   convex     1 - u for a concave sample u
///   spherical  the concave recipe under its own stream salt
///
/// Point i draws from CounterRng(seed, salt(family) + i), so every point
/// depends only on (family, d, seed, i).
PointSet generate(const InstanceSpec& spec);

/// Text format: one point per line, whitespace-separated decimals, '#' starts
/// a comment line, blank lines ignored. The dimension is taken from the first row.
PointSet load(const std::filesystem::path& path);
PointSet parse_points(std::istream& in);

/// Writes every coordinate with 17 significant digits, which round-trips
/// binary64 exactly.
void save(const PointSet& points, const std::filesystem::path& path);
void write_points(const PointSet& points, std::ostream& out);

}  // namespace qhv
