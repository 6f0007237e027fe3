#include "mptg/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

#include "mptg/errors.hpp"

namespace mptg {

Graph::Graph(int n) {
    if (n < 0) throw ContractError("vertex count must be non-negative");
    n_ = n;
    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw ContractError("vertex " + std::to_string(v) + " out of range [0, " +
                            std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ContractError("self loop at vertex " + std::to_string(u));
    bits_[static_cast<std::size_t>(u) * words_ + (static_cast<unsigned>(v) >> 6)] |=
        std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (static_cast<unsigned>(u) >> 6)] |=
        std::uint64_t{1} << (u & 63);
}

int Graph::edge_count() const {
    int count = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) ++count;
    return count;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

VertexOrdering VertexOrdering::identity(int n) {
    VertexOrdering sigma;
    sigma.perm.resize(static_cast<std::size_t>(n));
    std::iota(sigma.perm.begin(), sigma.perm.end(), 0);
    return sigma;
}

void VertexOrdering::validate(int n) const {
    if (static_cast<int>(perm.size()) != n)
        throw ContractError("ordering has " + std::to_string(perm.size()) +
                            " entries, expected " + std::to_string(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : perm) {
        if (v < 0 || v >= n)
            throw ContractError("ordering entry " + std::to_string(v) + " out of range");
        if (seen[static_cast<std::size_t>(v)])
            throw ContractError("ordering repeats vertex " + std::to_string(v));
        seen[static_cast<std::size_t>(v)] = true;
    }
}

AugmentedMatrix::AugmentedMatrix(const Graph& g, const VertexOrdering& sigma) {
    sigma.validate(g.size());
    n_ = g.size();
    words_ = (static_cast<std::size_t>(n_) + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i == j || g.adjacent(sigma.perm[static_cast<std::size_t>(i)],
                                     sigma.perm[static_cast<std::size_t>(j)]))
                bits_[static_cast<std::size_t>(i) * words_ + (static_cast<unsigned>(j) >> 6)] |=
                    std::uint64_t{1} << (j & 63);
}

int AugmentedMatrix::first_one(int row) const {
    for (int j = 0; j < n_; ++j)
        if (at(row, j)) return j;
    throw ContractError("row " + std::to_string(row) + " out of range");
}

int AugmentedMatrix::last_one(int row) const {
    for (int j = n_ - 1; j >= 0; --j)
        if (at(row, j)) return j;
    throw ContractError("row " + std::to_string(row) + " out of range");
}

Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    Graph g;

    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ' || sv.back() == '\t'))
            sv.remove_suffix(1);
        while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
        if (sv.empty() || sv.front() == '#') continue;

        std::istringstream tokens{std::string(sv)};
        if (!have_header) {
            std::string keyword;
            long long n = -1;
            std::string extra;
            if (!(tokens >> keyword >> n) || keyword != "n" || (tokens >> extra))
                throw ParseError(lineno, "expected header 'n <vertex-count>'");
            if (n < 0) throw ParseError(lineno, "vertex count must be non-negative");
            g = Graph(static_cast<int>(n));
            have_header = true;
            continue;
        }
        long long u, v;
        std::string extra;
        if (!(tokens >> u >> v) || (tokens >> extra))
            throw ParseError(lineno, "expected an edge line 'u v'");
        if (u < 0 || u >= g.size() || v < 0 || v >= g.size())
            throw ParseError(lineno, "edge endpoint out of range [0, " +
                                         std::to_string(g.size()) + ")");
        if (u == v) throw ParseError(lineno, "self loop at vertex " + std::to_string(u));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (!have_header) throw ParseError(lineno, "missing header 'n <vertex-count>'");
    return g;
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.size() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph make_cycle(int n) {
    if (n < 3) throw ContractError("cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph make_complete(int n) {
    if (n < 1) throw ContractError("complete graph needs at least 1 vertex");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph make_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw ContractError("both parts need at least 1 vertex");
    Graph g(m + n);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
    return g;
}

Graph make_wheel(int n) {
    if (n < 3) throw ContractError("wheel rim needs at least 3 vertices");
    Graph g(n + 1);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, n);
    }
    return g;
}

Graph make_caterpillar(const std::vector<int>& leg_counts) {
    if (leg_counts.empty()) throw ContractError("caterpillar needs at least one spine vertex");
    int total = static_cast<int>(leg_counts.size());
    for (int c : leg_counts) {
        if (c < 0) throw ContractError("leg counts must be non-negative");
        total += c;
    }
    Graph g(total);
    const int spine = static_cast<int>(leg_counts.size());
    for (int i = 0; i + 1 < spine; ++i) g.add_edge(i, i + 1);
    int next_leaf = spine;
    for (int i = 0; i < spine; ++i)
        for (int j = 0; j < leg_counts[static_cast<std::size_t>(i)]; ++j) g.add_edge(i, next_leaf++);
    return g;
}

Graph complement(const Graph& g) {
    Graph out(g.size());
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<bool> seen(static_cast<std::size_t>(g.size()), false);
    for (int v : vertices) {
        if (v < 0 || v >= g.size())
            throw ContractError("vertex " + std::to_string(v) + " out of range");
        if (seen[static_cast<std::size_t>(v)])
            throw ContractError("vertex " + std::to_string(v) + " repeated");
        seen[static_cast<std::size_t>(v)] = true;
    }
    Graph out(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

}  // namespace mptg
