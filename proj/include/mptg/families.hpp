#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mptg/builder.hpp"
#include "mptg/graph.hpp"
#include "mptg/verify.hpp"

namespace mptg {

// Closed-form proper representation of the complete graph K_n, n >= 1.
IntervalPointRep gen_Kn_proper_mptg(int n);

// Representation of K_{m,n} (labels matching make_complete_bipartite),
// m, n >= 1, 0 < eps < 1. Only the induced graph is contractual; the
// intervals happen to form a proper family as well.
IntervalPointRep gen_Kmn_mptg(int m, int n, const Rat& eps = Rat(1, 2));

// Closed-form proper representation of a caterpillar (labels matching
// make_caterpillar).
IntervalPointRep gen_caterpillar_proper_mptg(const std::vector<int>& leg_counts);

struct Fixture {
    std::string name;
    Graph graph;
    std::variant<IntervalPointRep, ToleranceRep> rep;
    std::vector<std::string> class_tags;
};

// Named instances with stored representations. Self-certifying: every
// representation is checked against its graph the first time the list is
// built (std::logic_error on mismatch, which would be a packaging bug).
// Names: figure5, w4_proper_mptg, c6bar_proper_mptg, c5_proper_maxtol,
// c6bar_proper_maxtol, g1_maxtol, k23_maxtol.
const std::vector<Fixture>& fixtures();
const Fixture& fixture(const std::string& name);  // ContractError on unknown name

// Frozen expectations for the 7-vertex worked example under the identity
// ordering: the precedence order of the b's, the full tagged sequence, and
// the integer realization.
struct Figure5Expected {
    VertexOrdering sigma;
    std::vector<int> b_order;     // 0-based positions
    CanonicalSequence sequence;
    IntervalPointRep integer_rep;  // position-indexed realize_integer output
};
const Figure5Expected& figure5_expected();

}  // namespace mptg
