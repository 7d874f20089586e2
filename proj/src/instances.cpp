#include "qhv/instances.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "qhv/errors.hpp"
#include "qhv/random.hpp"

namespace qhv {

const char* to_string(Family family) {
    switch (family) {
        case Family::Linear: return "linear";
        case Family::Concave: return "concave";
        case Family::Convex: return "convex";
        case Family::Spherical: return "spherical";
        case Family::File: return "file";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::Linear, Family::Concave, Family::Convex, Family::Spherical,
                     Family::File}) {
        if (name == to_string(f)) return f;
    }
    throw UsageError("unknown instance family '" + std::string(name) + "'");
}

namespace {

std::uint64_t stream_salt(Family family) {
    return static_cast<std::uint64_t>(family) << 48;
}

std::vector<double> unit_sphere_orthant(CounterRng& rng, std::size_t d) {
    std::vector<double> p(d);
    double norm = 0.0;
    while (!(norm > 0.0)) {
        norm = 0.0;
        for (auto& x : p) {
            x = std::fabs(rng.normal());
            norm += x * x;
        }
    }
    norm = std::sqrt(norm);
    for (auto& x : p) x = std::min(1.0, x / norm);
    return p;
}

std::vector<double> simplex(CounterRng& rng, std::size_t d) {
    std::vector<double> p(d);
    double sum = 0.0;
    for (auto& x : p) {
        x = rng.exponential();
        sum += x;
    }
    for (auto& x : p) x /= sum;
    return p;
}

}  // namespace

PointSet generate(const InstanceSpec& spec) {
    if (spec.family == Family::File) {
        throw UsageError("file instances are loaded, not generated");
    }
    if (spec.d < 2) throw UsageError("instance dimension must be at least 2");
    if (spec.n < 1) throw UsageError("instance size must be at least 1");

    PointSet out(spec.d);
    out.reserve(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        CounterRng rng(spec.seed, stream_salt(spec.family) + i);
        std::vector<double> p;
        switch (spec.family) {
            case Family::Linear:
                p = simplex(rng, spec.d);
                break;
            case Family::Concave:
            case Family::Spherical:
                p = unit_sphere_orthant(rng, spec.d);
                break;
            case Family::Convex:
                p = unit_sphere_orthant(rng, spec.d);
                for (auto& x : p) x = 1.0 - x;
                break;
            case Family::File:
                break;
        }
        out.push_back(p);
    }
    return out;
}

PointSet parse_points(std::istream& in) {
    PointSet out;
    std::string line;
    std::size_t lineno = 0;
    std::vector<double> row;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;

        row.clear();
        const char* cur = line.data() + pos;
        const char* end = line.data() + line.size();
        while (cur < end) {
            while (cur < end && (*cur == ' ' || *cur == '\t' || *cur == '\r')) ++cur;
            if (cur == end) break;
            double value = 0.0;
            // from_chars rejects a leading '+'.
            const char* start = (*cur == '+') ? cur + 1 : cur;
            auto [next, ec] = std::from_chars(start, end, value);
            if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t' &&
                                      *next != '\r')) {
                const char* tok_end = cur;
                while (tok_end < end && *tok_end != ' ' && *tok_end != '\t') ++tok_end;
                throw ParseError(lineno, "not a number: '" + std::string(cur, tok_end) + "'");
            }
            if (!std::isfinite(value)) throw ParseError(lineno, "non-finite coordinate");
            row.push_back(value);
            cur = next;
        }
        if (row.size() < 2) {
            throw ParseError(lineno, "a point needs at least 2 coordinates");
        }
        if (!out.empty() && row.size() != out.dim()) {
            throw ParseError(lineno, "expected " + std::to_string(out.dim()) +
                                         " coordinates, found " + std::to_string(row.size()));
        }
        out.push_back(row);
    }
    if (out.empty()) throw ParseError(lineno, "no points in input");
    return out;
}

PointSet load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    return parse_points(in);
}

void write_points(const PointSet& points, std::ostream& out) {
    char buf[32];
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto p = points[i];
        for (std::size_t j = 0; j < p.size(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", p[j]);
            if (j > 0) out << ' ';
            out << buf;
        }
        out << '\n';
    }
}

void save(const PointSet& points, const std::filesystem::path& path) {
    if (points.empty()) throw UsageError("refusing to save an empty point set");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    write_points(points, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace qhv
