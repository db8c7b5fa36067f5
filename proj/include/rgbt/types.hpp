#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace rgbt {

using Vertex = int;
using EdgeId = int;

inline constexpr EdgeId kNoEdge = -1;

/// Malformed input: bad syntax, inconsistent files, unknown edges.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
    InputError(const std::string& what, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_ = 0;
    int column_ = 0;
};

/// Structurally invalid embedding or tiling (Euler failure, bad facet, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A requested operation has no valid result (odd conflict cycle, stale ring, ...).
class OperationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal consistency check failed after an operation. Indicates a bug.
class EngineError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline std::pair<Vertex, Vertex> canonical_pair(Vertex a, Vertex b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

} // namespace rgbt
