#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qhv {

/// Bad arguments from the caller: dimension mismatch, empty input, out-of-range flags.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The engine cannot run with the requested configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical problem has no solution in the admissible domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class TimeoutError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace qhv
