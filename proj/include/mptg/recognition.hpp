#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mptg/graph.hpp"
#include "mptg/orderings.hpp"

namespace mptg {

inline constexpr int kDefaultSearchBound = 11;
inline constexpr int kDefaultPerfectionBound = 10;

struct SearchStats {
    std::uint64_t nodes = 0;   // candidate placements tested
    std::uint64_t prunes = 0;  // placements rejected by a prefix violation
};

struct RecognitionResult {
    bool member = false;
    std::optional<VertexOrdering> ordering;  // set exactly when member
    SearchStats stats;
    // True for the proper max-tolerance search, whose member verdict only
    // certifies a necessary condition, not class membership.
    bool necessary_condition_only = false;
};

// Backtracking over vertex orderings: vertices are tried in ascending label
// order at every level and a placement is cut as soon as the prefix matrix
// violates the class condition (violations never disappear under extension,
// so pruning is sound). Deterministic; the returned ordering is the
// lexicographically least passing one. Throws BoundExceeded when
// g.size() > bound.
RecognitionResult find_mptg_ordering(const Graph& g, int bound = kDefaultSearchBound);
RecognitionResult find_proper_mptg_ordering(const Graph& g, int bound = kDefaultSearchBound);
// Searches for an ordering passing the proper max-tolerance *necessary*
// condition. A member verdict certifies only that condition; non-member is
// a definite exclusion from the proper max-tolerance class.
RecognitionResult find_proper_maxtol_ordering(const Graph& g, int bound = kDefaultSearchBound);

struct AsteroidalTriple {
    int u, v, w;  // vertex labels, u < v < w
};

// Direct definition: an independent triple where every pair is connected by
// a path avoiding the closed neighborhood of the third vertex. Returns the
// lexicographically least triple, or nullopt when the graph is AT-free.
std::optional<AsteroidalTriple> find_asteroidal_triple(const Graph& g);
bool is_at_free(const Graph& g);

struct ImperfectWitness {
    std::vector<int> vertices;  // induced subgraph with chi > omega
    int chromatic = 0;
    int clique = 0;
};

// Exact chromatic number versus exact clique number over every induced
// subgraph. nullopt means perfect; otherwise the first offending vertex set
// in subset-mask order. Throws BoundExceeded when g.size() > bound.
std::optional<ImperfectWitness> is_perfect_bruteforce(const Graph& g,
                                                      int bound = kDefaultPerfectionBound);

}  // namespace mptg
