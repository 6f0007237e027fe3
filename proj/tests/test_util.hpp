#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "mptg/builder.hpp"
#include "mptg/graph.hpp"
#include "mptg/orderings.hpp"
#include "mptg/verify.hpp"

namespace testutil {

// Every graph on n labeled vertices, one per edge subset.
template <typename Fn>
void all_graphs(int n, Fn fn) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    const unsigned long long total = 1ull << slots.size();
    for (unsigned long long mask = 0; mask < total; ++mask) {
        mptg::Graph g(n);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
        fn(g);
    }
}

template <typename Fn>
void for_each_ordering(int n, Fn fn) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        mptg::VertexOrdering sigma;
        sigma.perm = perm;
        fn(sigma);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

inline mptg::Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    mptg::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Edge semantics restated from scratch so fixture checks do not lean on the
// library's own induced-graph code.
inline bool oracle_mptg_edge(const mptg::IntervalPointRep& rep, int u, int v) {
    const auto& iu = rep.vertices[static_cast<std::size_t>(u)];
    const auto& iv = rep.vertices[static_cast<std::size_t>(v)];
    const bool pu_in_both = iu.a <= iu.p && iu.p <= iu.b && iv.a <= iu.p && iu.p <= iv.b;
    const bool pv_in_both = iu.a <= iv.p && iv.p <= iu.b && iv.a <= iv.p && iv.p <= iv.b;
    return pu_in_both && pv_in_both;
}

inline bool oracle_maxtol_edge(const mptg::ToleranceRep& rep, int u, int v) {
    const auto& iu = rep.vertices[static_cast<std::size_t>(u)];
    const auto& iv = rep.vertices[static_cast<std::size_t>(v)];
    const mptg::Rat lo = iu.a > iv.a ? iu.a : iv.a;
    const mptg::Rat hi = iu.b < iv.b ? iu.b : iv.b;
    if (hi < lo) return false;
    const mptg::Rat need = iu.t > iv.t ? iu.t : iv.t;
    return hi - lo >= need;
}

// Reference search: smallest passing ordering by full enumeration.
template <typename Check>
std::optional<mptg::VertexOrdering> brute_force_ordering(const mptg::Graph& g, Check passes) {
    std::optional<mptg::VertexOrdering> found;
    for_each_ordering(g.size(), [&](const mptg::VertexOrdering& sigma) {
        if (!found && passes(mptg::AugmentedMatrix(g, sigma))) found = sigma;
    });
    return found;
}

}  // namespace testutil
