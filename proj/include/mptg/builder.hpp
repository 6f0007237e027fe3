#pragma once

#include <string>
#include <vector>

#include "mptg/graph.hpp"
#include "mptg/rational.hpp"

namespace mptg {

enum class TagKind { A, P, B };

struct EndpointTag {
    TagKind kind;
    int vertex;  // sigma position, 0-based

    bool operator==(const EndpointTag&) const = default;
};

// The 3n tagged endpoints in line order. Invariants (checked on
// construction): the restriction to B tags equals the precedence order of
// the b's, the restriction to A tags equals the same order, and every
// vertex has A before P before B.
struct CanonicalSequence {
    int n = 0;
    std::vector<EndpointTag> entries;

    // 0-based index into entries; ContractError when absent.
    int position_of(TagKind kind, int vertex) const;
    std::string to_string() const;  // e.g. "a2 a1 p1 b2 b1", vertices 1-based
};

// Which clauses put b_j before b_i for a pair i < j. All three are always
// evaluated; when none fired, the direction is the default b_i before b_j.
struct PairDerivation {
    bool r1 = false;
    bool r2 = false;
    bool composite = false;

    bool reversed() const { return r1 || r2 || composite; }
};

// Total order on right endpoints b_0..b_{n-1} derived from an MPTG ordering.
class PrecedenceRelation {
  public:
    PrecedenceRelation() = default;
    explicit PrecedenceRelation(int n);

    int size() const { return n_; }
    // b_x strictly before b_y.
    bool b_precedes(int x, int y) const;
    const PairDerivation& derivation(int i, int j) const;  // requires i < j
    void set_derivation(int i, int j, PairDerivation d);
    // Positions sorted by the relation, first b first.
    std::vector<int> b_order() const;

  private:
    std::size_t index(int i, int j) const;

    int n_ = 0;
    std::vector<PairDerivation> pairs_;
};

// b_j R1 b_i: some k2 > j has a(j,k2) == 0 and a(i,k2) == 1.
// Pre: 0 <= i < j < a.size() and a passes is_mptg_ordering; ContractError
// otherwise.
bool relation_R1(const AugmentedMatrix& a, int i, int j);
// b_j R2 b_i: some k1 < i has a(k1,i) == 0 and a(k1,j) == 1. Same contract.
bool relation_R2(const AugmentedMatrix& a, int i, int j);

// Evaluates R1, R2 and the composite clause (b_j R1 b_k and b_k R2 b_i for
// some i < k < j) for every pair, then checks that the relation is a total
// order. Throws ContractError when a is not an MPTG ordering and
// PrecedenceInconsistency when a zero above the diagonal came out reversed
// or a directed 3-cycle exists (either rules out a proper MPTG ordering).
PrecedenceRelation precedes(const AugmentedMatrix& a);

// Places the a's (backwards) and b's (forwards) into the gaps between the
// p's per their first/last-one columns; within one gap, closing endpoints
// precede opening ones. prec.size() must match a.size().
CanonicalSequence canonical_sequence(const AugmentedMatrix& a, const PrecedenceRelation& prec);

struct RepVertex {
    Rat a, b, p;

    bool operator==(const RepVertex&) const = default;
};

// Interval-plus-point representation; entry i belongs to vertex i (or to
// sigma position i for representations built from an ordered matrix).
struct IntervalPointRep {
    std::vector<RepVertex> vertices;

    int size() const { return static_cast<int>(vertices.size()); }
    // a <= p <= b per vertex; ContractError naming the vertex otherwise.
    void validate() const;

    bool operator==(const IntervalPointRep&) const = default;
};

// Coordinates are the 1..3n positions of the sequence entries.
IntervalPointRep realize_integer(const CanonicalSequence& seq);

// All intervals get length len (> 0); left endpoints are placed in sequence
// order, each at the midpoint of its feasibility window (lower bound plus
// len/2 when unbounded above), starting at 0; point values subdivide the gap
// between their neighboring endpoint values evenly. Endpoint and point order
// in the output agrees with seq. Throws UnitInfeasible when a window is
// empty.
IntervalPointRep realize_unit(const CanonicalSequence& seq, const Rat& len = Rat(1));

// Entry i of the result belongs to vertex sigma.perm[i] of the original
// graph. Use to turn a position-indexed representation into a vertex-indexed
// one.
IntervalPointRep apply_ordering(const IntervalPointRep& position_rep, const VertexOrdering& sigma);

// Spreads coincident point values rightwards in epsilon steps small enough
// that no other landmark is crossed; the induced graph is unchanged and
// properness is preserved. Idempotent on already-distinct inputs.
IntervalPointRep normalize_distinct_points(const IntervalPointRep& rep);

}  // namespace mptg
