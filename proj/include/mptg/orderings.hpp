#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mptg/graph.hpp"

namespace mptg {

enum class Condition {
    FourPoint,
    NonEdge,
    MatrixZero,
    ThreePoint,
    FivePointOne,
    FivePointTwo,
    SixPoint,
    ProperMaxTol,
};

std::string condition_name(Condition c);

// A concrete refutation of one ordering condition. positions are 0-based
// sigma positions, ordered as the condition states them; cell is the stuck
// zero for the matrix-level condition.
struct ViolationWitness {
    Condition condition;
    std::vector<int> positions;
    std::optional<std::pair<int, int>> cell;

    // True when the tuple still violates `a`. Malformed witnesses replay
    // to false rather than throwing.
    bool replay(const AugmentedMatrix& a) const;
    std::string describe() const;  // positions printed 1-based
};

// nullopt means the condition holds. Witnesses are the lexicographically
// least violating tuple in sigma-position order.
using CheckResult = std::optional<ViolationWitness>;

// x < u < v < y, xv and uy edges force uv.
CheckResult check_4point(const AugmentedMatrix& a);
// A non-edge uv forbids either all edges from u to the right of v, or all
// edges into v from the left of u. The witness carries one blocker of each.
CheckResult check_nonedge_condition(const AugmentedMatrix& a);
// Every zero above the diagonal must be right open or up open. The witness
// is the stuck zero plus its right and up blocking ones.
CheckResult check_matrix_zero_condition(const AugmentedMatrix& a);

// v1 < v2 < v3, v1v3 an edge forces v1v2 or v2v3.
CheckResult check_3point(const AugmentedMatrix& a);
// v1..v5 increasing, v1v4 and v2v5 edges and (v1v2 or v4v5) force v1v3 or v3v5.
CheckResult check_5point_1(const AugmentedMatrix& a);
// v1..v5 increasing, v1v3 and v3v5 edges force v1v2 or v2v4 or v4v5.
CheckResult check_5point_2(const AugmentedMatrix& a);
// v1 < v2 < vj, vk < v5 < v6 with v1vj, vjv5, v2vk, vkv6 edges force v1v2 or
// v2v5 or v5v6; both relative orders of vj, vk between v2 and v5 count.
CheckResult check_6point(const AugmentedMatrix& a);

// v1 < v2 < v3 < v4, v1v3 and v2v4 edges force v2v3 and (v1v2 or v3v4).
// Necessary (not sufficient) for proper max-tolerance orderings.
CheckResult check_proper_maxtol_ordering(const AugmentedMatrix& a);

// The 4-point condition alone.
bool is_mptg_ordering(const AugmentedMatrix& a);

// 4-point plus the 3/5/5/6-point conditions, evaluated in that fixed order;
// returns the first failing condition's witness.
CheckResult check_proper_mptg_ordering(const AugmentedMatrix& a);
bool is_proper_mptg_ordering(const AugmentedMatrix& a);

}  // namespace mptg
