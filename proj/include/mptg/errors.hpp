#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace mptg {

// A documented precondition was violated by the caller.
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed textual input. line is 1-based; 0 when no line applies.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what_ : what_),
          line(line_) {}
};

// Instance is larger than the configured bound for an expensive procedure.
struct BoundExceeded : std::runtime_error {
    int n;
    int bound;
    BoundExceeded(int n_, int bound_)
        : std::runtime_error("instance has " + std::to_string(n_) +
                             " vertices, over the bound of " + std::to_string(bound_)),
          n(n_), bound(bound_) {}
};

// The endpoint precedence relation is not a total order on this input, or
// its sanity property failed. positions are 0-based matrix positions; the
// third entry is -1 for pair-level failures.
struct PrecedenceInconsistency : std::runtime_error {
    std::array<int, 3> positions;
    PrecedenceInconsistency(const std::string& what_, std::array<int, 3> positions_)
        : std::runtime_error(what_), positions(positions_) {}
};

// Empty feasibility window while placing equal-length intervals. step is the
// 0-based index into the placement order; -1 for a post-placement failure.
struct UnitInfeasible : std::runtime_error {
    int step;
    UnitInfeasible(int step_, const std::string& what_)
        : std::runtime_error(what_), step(step_) {}
};

}  // namespace mptg
