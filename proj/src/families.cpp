#include "mptg/families.hpp"

#include <stdexcept>
#include <utility>

#include "mptg/errors.hpp"

namespace mptg {

IntervalPointRep gen_Kn_proper_mptg(int n) {
    if (n < 1) throw ContractError("K_n needs n >= 1");
    IntervalPointRep rep;
    rep.vertices.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        RepVertex& rv = rep.vertices[static_cast<std::size_t>(i - 1)];
        rv.a = Rat(1) + Rat(i, n);
        rv.b = Rat(n + i);
        if (i == 1)
            rv.p = 2;
        else if (i == 2)
            rv.p = Rat(5, 2);
        else
            rv.p = i;
    }
    return rep;
}

IntervalPointRep gen_Kmn_mptg(int m, int n, const Rat& eps) {
    if (m < 1 || n < 1) throw ContractError("K_{m,n} needs m, n >= 1");
    if (!(eps > 0 && eps < 1)) throw ContractError("epsilon must satisfy 0 < eps < 1");
    IntervalPointRep rep;
    rep.vertices.resize(static_cast<std::size_t>(m + n));
    for (int i = 1; i <= m; ++i) {
        RepVertex& rv = rep.vertices[static_cast<std::size_t>(i - 1)];
        rv.a = i;
        rv.b = Rat(m + n) + Rat(i) * eps / m;
        rv.p = i;
    }
    for (int j = 1; j <= n; ++j) {
        RepVertex& rv = rep.vertices[static_cast<std::size_t>(m + j - 1)];
        rv.a = Rat(j) * eps / n;
        rv.b = Rat(j + m);
        rv.p = Rat(j + m);
    }
    return rep;
}

IntervalPointRep gen_caterpillar_proper_mptg(const std::vector<int>& leg_counts) {
    if (leg_counts.empty()) throw ContractError("caterpillar needs at least one spine vertex");
    for (int c : leg_counts)
        if (c < 0) throw ContractError("leg counts must be non-negative");

    IntervalPointRep rep;
    const int spine = static_cast<int>(leg_counts.size());
    int total = spine;
    for (int c : leg_counts) total += c;
    rep.vertices.resize(static_cast<std::size_t>(total));

    for (int i = 1; i <= spine; ++i) {
        RepVertex& rv = rep.vertices[static_cast<std::size_t>(i - 1)];
        rv.a = 2 * i - 3;
        rv.b = 2 * i + 2;
        rv.p = 2 * i;
    }
    int next_leaf = spine;
    for (int i = 1; i <= spine; ++i) {
        const int legs = leg_counts[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= legs; ++j) {
            RepVertex& rv = rep.vertices[static_cast<std::size_t>(next_leaf++)];
            rv.a = Rat(2 * i - 3) - Rat(legs - j + 1, legs + 1);
            rv.b = Rat(2 * i) + Rat(2 * j, 2 * legs + 1);
            rv.p = Rat(2 * i) + Rat(2 * j - 1, 2 * legs + 1);
        }
    }
    return rep;
}

namespace {

IntervalPointRep ip_rep(std::vector<RepVertex> vertices) {
    IntervalPointRep rep;
    rep.vertices = std::move(vertices);
    return rep;
}

ToleranceRep tol_rep(std::vector<TolVertex> vertices) {
    ToleranceRep rep;
    rep.vertices = std::move(vertices);
    return rep;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::vector<Fixture> build_fixtures() {
    std::vector<Fixture> out;

    // 7-vertex worked example
    out.push_back({"figure5",
                   graph_from_edges(7, {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 4},
                                        {3, 5}, {3, 6}}),
                   ip_rep({{1, 13, 6},
                           {2, 10, 8},
                           {7, 20, 9},
                           {5, 19, 12},
                           {3, 15, 14},
                           {4, 17, 16},
                           {11, 21, 18}}),
                   {"mptg", "proper-mptg"}});

    // 4-wheel: rim 0..3, center 4
    out.push_back({"w4_proper_mptg", make_wheel(4),
                   ip_rep({{20, 120, 50},
                           {10, 100, 70},
                           {60, 150, 90},
                           {40, 140, 110},
                           {30, 130, 80}}),
                   {"mptg", "proper-mptg"}});

    // complement of the 6-cycle
    out.push_back({"c6bar_proper_mptg", complement(make_cycle(6)),
                   ip_rep({{20, 40, 39},
                           {15, 38, 30},
                           {32, 46, 33},
                           {25, 42, 27},
                           {28, 44, 37},
                           {10, 36, 34}}),
                   {"mptg", "proper-mptg"}});

    // 5-cycle: proper max-tolerance but no proper MPTG ordering exists
    out.push_back({"c5_proper_maxtol", make_cycle(5),
                   tol_rep({{1, 6, Rat(1, 4)},
                            {Rat(6, 5), 8, Rat(47, 10)},
                            {3, 10, Rat(24, 5)},
                            {5, 12, 4},
                            {Rat(11, 2), 13, Rat(7, 20)}}),
                   {"maxtol", "proper-interval-rep", "mptg", "not-proper-mptg"}});

    // complement of the 6-cycle again, max-tolerance flavor
    out.push_back({"c6bar_proper_maxtol", complement(make_cycle(6)),
                   tol_rep({{2, 8, Rat(29, 10)},
                            {4, 10, Rat(9, 2)},
                            {1, Rat(71, 10), 1},
                            {5, 11, 3},
                            {3, 9, Rat(41, 10)},
                            {Rat(26, 5), 12, Rat(3, 2)}}),
                   {"maxtol", "proper-interval-rep", "proper-mptg"}});

    // spider with three length-2 legs: tips 0,1,2, joints 3,5,6, center 4
    out.push_back({"g1_maxtol",
                   graph_from_edges(7, {{0, 3}, {3, 4}, {4, 5}, {5, 1}, {4, 6}, {6, 2}}),
                   tol_rep({{10, 25, 5},
                            {45, 53, 8},
                            {65, 75, 10},
                            {20, 40, 5},
                            {30, 70, 10},
                            {45, 60, 8},
                            {60, 80, 10}}),
                   {"maxtol", "mptg", "has-at"}});

    // K_{2,3}: max-tolerance, yet no ordering passes the proper
    // max-tolerance necessary condition
    out.push_back({"k23_maxtol", make_complete_bipartite(2, 3),
                   tol_rep({{-20, 0, 1},
                            {0, 20, 1},
                            {-2, 2, 1},
                            {-6, 6, 5},
                            {-20, 20, 19}}),
                   {"maxtol", "mptg", "not-proper-maxtol"}});

    for (const Fixture& f : out) {
        const bool ok = std::visit(
            [&](const auto& rep) {
                rep.validate();
                return certify(rep, f.graph).empty();
            },
            f.rep);
        if (!ok)
            throw std::logic_error("fixture '" + f.name + "' does not certify against its graph");
    }
    return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = build_fixtures();
    return all;
}

const Fixture& fixture(const std::string& name) {
    for (const Fixture& f : fixtures())
        if (f.name == name) return f;
    std::string names;
    for (const Fixture& f : fixtures()) names += (names.empty() ? "" : ", ") + f.name;
    throw ContractError("unknown fixture '" + name + "' (have: " + names + ")");
}

const Figure5Expected& figure5_expected() {
    static const Figure5Expected expected = [] {
        Figure5Expected e;
        e.sigma = VertexOrdering::identity(7);
        e.b_order = {1, 0, 4, 5, 3, 2, 6};

        e.sequence.n = 7;
        const TagKind A = TagKind::A, P = TagKind::P, B = TagKind::B;
        e.sequence.entries = {{A, 1}, {A, 0}, {A, 4}, {A, 5}, {A, 3}, {P, 0}, {A, 2},
                              {P, 1}, {P, 2}, {B, 1}, {A, 6}, {P, 3}, {B, 0}, {P, 4},
                              {B, 4}, {P, 5}, {B, 5}, {P, 6}, {B, 3}, {B, 2}, {B, 6}};

        e.integer_rep = [] {
            IntervalPointRep rep;
            rep.vertices = {{2, 13, 6}, {1, 10, 8},  {7, 20, 9},  {5, 19, 12},
                            {3, 15, 14}, {4, 17, 16}, {11, 21, 18}};
            return rep;
        }();
        return e;
    }();
    return expected;
}

}  // namespace mptg
