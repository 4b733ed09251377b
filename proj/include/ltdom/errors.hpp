#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ltdom {

// Raised when a graph6 line cannot be decoded. byte_offset points at the
// offending byte within the line.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const noexcept { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

// No set satisfying the requested predicate exists, e.g. total domination of
// a graph with an isolated vertex.
class infeasible_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The request exceeds a configured or hard limit (solver vertex cap,
// enumerator order cap).
class capability_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ltdom
