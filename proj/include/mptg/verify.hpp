#pragma once

#include <optional>
#include <vector>

#include "mptg/builder.hpp"
#include "mptg/graph.hpp"
#include "mptg/rational.hpp"

namespace mptg {

struct TolVertex {
    Rat a, b, t;

    bool operator==(const TolVertex&) const = default;
};

// Intervals with per-vertex tolerances: an edge needs the intersection
// length to reach the larger of the two tolerances.
struct ToleranceRep {
    std::vector<TolVertex> vertices;

    int size() const { return static_cast<int>(vertices.size()); }
    // a < b and t > 0 per vertex; ContractError naming the vertex otherwise.
    void validate() const;
    // Vertices whose tolerance exceeds their interval length (legal but
    // worth flagging: such a vertex can never gain an edge through its own
    // tolerance).
    std::vector<int> tolerance_warnings() const;

    bool operator==(const ToleranceRep&) const = default;
};

// Edge uv iff both points lie in both intervals (closed, non-strict).
Graph induced_mptg(const IntervalPointRep& rep);
// Edge uv iff the intervals intersect and the intersection length is at
// least max(t_u, t_v); touching intervals intersect with length 0.
Graph induced_maxtol(const ToleranceRep& rep);

struct ContainmentWitness {
    int inner, outer;  // I_inner strictly contained in I_outer
};
// nullopt when no interval properly contains another (equal intervals are
// fine). Witness is the first offending (inner, outer) pair scanned in
// lexicographic order.
std::optional<ContainmentWitness> is_proper(const IntervalPointRep& rep);
std::optional<ContainmentWitness> is_proper(const ToleranceRep& rep);

struct LengthMismatch {
    int u, v;
    Rat len_u, len_v;
};
// nullopt when all intervals share one length.
std::optional<LengthMismatch> is_unit(const IntervalPointRep& rep);

struct EdgeMismatch {
    int u, v;      // u < v
    bool in_graph;  // true: edge in g missing from the induced graph;
                    // false: induced edge absent from g
};
// Empty result means rep induces exactly g. Pairs are reported in
// lexicographic order. Throws ContractError when sizes differ or the
// representation is invalid.
std::vector<EdgeMismatch> certify(const IntervalPointRep& rep, const Graph& g);
std::vector<EdgeMismatch> certify(const ToleranceRep& rep, const Graph& g);

}  // namespace mptg
