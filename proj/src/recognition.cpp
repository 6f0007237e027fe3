#include "mptg/recognition.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "mptg/errors.hpp"

namespace mptg {

namespace {

enum class SearchKind { Mptg, ProperMptg, ProperMaxTol };

// Augmented adjacency over the positions of a partial ordering; single-word
// rows cap the search at 64 vertices, far beyond any feasible bound.
struct PrefixMatrix {
    std::uint64_t row[64] = {};

    bool at(int i, int j) const { return (row[i] >> j) & 1u; }
};

// Checks only tuples whose largest position is k (the one just placed);
// older tuples were checked when their own largest position was placed.
bool placement_violates(const PrefixMatrix& m, int k, SearchKind kind) {
    switch (kind) {
        case SearchKind::Mptg:
            break;
        case SearchKind::ProperMptg:
            // 3-point, vk as v3
            for (int i = 0; i < k; ++i) {
                if (!m.at(i, k)) continue;
                for (int j = i + 1; j < k; ++j)
                    if (!m.at(i, j) && !m.at(j, k)) return true;
            }
            // 5-point-1, vk as v5
            for (int t1 = 0; t1 < k; ++t1)
                for (int t2 = t1 + 1; t2 < k; ++t2) {
                    if (!m.at(t2, k)) continue;
                    for (int t3 = t2 + 1; t3 < k; ++t3) {
                        if (m.at(t1, t3) || m.at(t3, k)) continue;
                        for (int t4 = t3 + 1; t4 < k; ++t4)
                            if (m.at(t1, t4) && (m.at(t1, t2) || m.at(t4, k))) return true;
                    }
                }
            // 5-point-2, vk as v5
            for (int t1 = 0; t1 < k; ++t1)
                for (int t2 = t1 + 1; t2 < k; ++t2) {
                    if (m.at(t1, t2)) continue;
                    for (int t3 = t2 + 1; t3 < k; ++t3) {
                        if (!m.at(t1, t3) || !m.at(t3, k)) continue;
                        for (int t4 = t3 + 1; t4 < k; ++t4)
                            if (!m.at(t2, t4) && !m.at(t4, k)) return true;
                    }
                }
            // 6-point, vk as v6
            for (int t1 = 0; t1 < k; ++t1)
                for (int t2 = t1 + 1; t2 < k; ++t2) {
                    if (m.at(t1, t2)) continue;
                    for (int t5 = t2 + 2; t5 < k; ++t5) {
                        if (m.at(t2, t5) || m.at(t5, k)) continue;
                        for (int t3 = t2 + 1; t3 < t5; ++t3)
                            for (int t4 = t3 + 1; t4 < t5; ++t4) {
                                if (m.at(t1, t3) && m.at(t3, t5) && m.at(t2, t4) && m.at(t4, k))
                                    return true;
                                if (m.at(t1, t4) && m.at(t4, t5) && m.at(t2, t3) && m.at(t3, k))
                                    return true;
                            }
                    }
                }
            break;
        case SearchKind::ProperMaxTol:
            // necessary condition, vk as v4
            for (int t1 = 0; t1 < k; ++t1)
                for (int t2 = t1 + 1; t2 < k; ++t2) {
                    if (!m.at(t2, k)) continue;
                    for (int t3 = t2 + 1; t3 < k; ++t3)
                        if (m.at(t1, t3) && !(m.at(t2, t3) && (m.at(t1, t2) || m.at(t3, k))))
                            return true;
                }
            break;
    }
    if (kind == SearchKind::Mptg || kind == SearchKind::ProperMptg) {
        // 4-point, vk as y
        for (int u = 0; u < k; ++u) {
            if (!m.at(u, k)) continue;
            for (int x = 0; x < u; ++x)
                for (int v = u + 1; v < k; ++v)
                    if (m.at(x, v) && !m.at(u, v)) return true;
        }
    }
    return false;
}

struct Searcher {
    const Graph& g;
    SearchKind kind;
    SearchStats stats;
    PrefixMatrix m;
    std::vector<int> perm;
    std::vector<bool> used;

    Searcher(const Graph& g_, SearchKind kind_) : g(g_), kind(kind_) {
        used.assign(static_cast<std::size_t>(g.size()), false);
    }

    bool run() {
        const int n = g.size();
        const int k = static_cast<int>(perm.size());
        if (k == n) return true;
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            ++stats.nodes;
            const std::uint64_t bit_k = std::uint64_t{1} << k;
            std::uint64_t row_k = bit_k;
            for (int i = 0; i < k; ++i) {
                if (g.adjacent(perm[static_cast<std::size_t>(i)], v)) {
                    m.row[i] |= bit_k;
                    row_k |= std::uint64_t{1} << i;
                } else {
                    m.row[i] &= ~bit_k;
                }
            }
            m.row[k] = row_k;
            if (placement_violates(m, k, kind)) {
                ++stats.prunes;
                continue;
            }
            perm.push_back(v);
            used[static_cast<std::size_t>(v)] = true;
            if (run()) return true;
            used[static_cast<std::size_t>(v)] = false;
            perm.pop_back();
        }
        return false;
    }
};

RecognitionResult find_ordering(const Graph& g, int bound, SearchKind kind) {
    if (g.size() > bound) throw BoundExceeded(g.size(), bound);
    if (g.size() > 64) throw BoundExceeded(g.size(), 64);

    Searcher searcher(g, kind);
    RecognitionResult result;
    if (searcher.run()) {
        result.member = true;
        result.ordering = VertexOrdering{searcher.perm};
        // Soundness: replay the full checker on the found ordering.
        AugmentedMatrix a(g, *result.ordering);
        bool ok = false;
        switch (kind) {
            case SearchKind::Mptg: ok = is_mptg_ordering(a); break;
            case SearchKind::ProperMptg: ok = is_proper_mptg_ordering(a); break;
            case SearchKind::ProperMaxTol:
                ok = !check_proper_maxtol_ordering(a).has_value();
                break;
        }
        if (!ok) throw std::logic_error("search returned an ordering the full checker rejects");
    }
    result.stats = searcher.stats;
    return result;
}

// Connected components of g minus the closed neighborhood of w; -1 marks
// removed vertices.
std::vector<int> components_avoiding(const Graph& g, int w) {
    const int n = g.size();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<int> stack;
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1 || s == w || g.adjacent(s, w)) continue;
        comp[static_cast<std::size_t>(s)] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v) {
                if (v == w || g.adjacent(v, w) || comp[static_cast<std::size_t>(v)] != -1)
                    continue;
                if (g.adjacent(u, v)) {
                    comp[static_cast<std::size_t>(v)] = next;
                    stack.push_back(v);
                }
            }
        }
        ++next;
    }
    return comp;
}

}  // namespace

RecognitionResult find_mptg_ordering(const Graph& g, int bound) {
    return find_ordering(g, bound, SearchKind::Mptg);
}

RecognitionResult find_proper_mptg_ordering(const Graph& g, int bound) {
    return find_ordering(g, bound, SearchKind::ProperMptg);
}

RecognitionResult find_proper_maxtol_ordering(const Graph& g, int bound) {
    RecognitionResult result = find_ordering(g, bound, SearchKind::ProperMaxTol);
    result.necessary_condition_only = true;
    return result;
}

std::optional<AsteroidalTriple> find_asteroidal_triple(const Graph& g) {
    const int n = g.size();
    std::vector<std::vector<int>> comp;
    comp.reserve(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) comp.push_back(components_avoiding(g, w));

    auto joined = [&](int x, int y, int avoiding) {
        int cx = comp[static_cast<std::size_t>(avoiding)][static_cast<std::size_t>(x)];
        int cy = comp[static_cast<std::size_t>(avoiding)][static_cast<std::size_t>(y)];
        return cx != -1 && cx == cy;
    };

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            for (int w = v + 1; w < n; ++w) {
                if (g.adjacent(u, w) || g.adjacent(v, w)) continue;
                if (joined(u, v, w) && joined(u, w, v) && joined(v, w, u))
                    return AsteroidalTriple{u, v, w};
            }
        }
    return std::nullopt;
}

bool is_at_free(const Graph& g) { return !find_asteroidal_triple(g).has_value(); }

std::optional<ImperfectWitness> is_perfect_bruteforce(const Graph& g, int bound) {
    const int n = g.size();
    if (n > bound) throw BoundExceeded(n, bound);
    if (n > 25) throw BoundExceeded(n, 25);
    if (n == 0) return std::nullopt;

    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v)) adj[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;

    std::vector<std::uint8_t> indep(full + 1u, 0);
    std::vector<std::uint8_t> omega(full + 1u, 0);
    std::vector<std::uint8_t> chi(full + 1u, 0);
    indep[0] = 1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        const int v = std::countr_zero(s);
        const std::uint32_t rest = s & (s - 1);
        indep[s] = indep[rest] && !(adj[static_cast<std::size_t>(v)] & rest);
        omega[s] = std::max<std::uint8_t>(
            omega[rest],
            static_cast<std::uint8_t>(1 + omega[rest & adj[static_cast<std::size_t>(v)]]));
        // chi: v's color class is some independent subset of s containing v
        std::uint8_t best = static_cast<std::uint8_t>(n + 1);
        for (std::uint32_t c = s; c; c = (c - 1) & s) {
            if (!((c >> v) & 1u) || !indep[c]) continue;
            best = std::min<std::uint8_t>(best, static_cast<std::uint8_t>(1 + chi[s ^ c]));
        }
        chi[s] = best;
    }

    for (std::uint32_t s = 1; s <= full; ++s) {
        if (chi[s] > omega[s]) {
            ImperfectWitness witness;
            witness.chromatic = chi[s];
            witness.clique = omega[s];
            for (int v = 0; v < n; ++v)
                if ((s >> v) & 1u) witness.vertices.push_back(v);
            return witness;
        }
    }
    return std::nullopt;
}

}  // namespace mptg
