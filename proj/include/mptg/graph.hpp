#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace mptg {

// Simple undirected graph on vertices 0..n-1. Adjacency is a bit matrix,
// one machine word per 64 vertices per row, so the ordering checkers can sit
// inside factorial search loops without pointer chasing.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);

    int size() const { return n_; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (static_cast<unsigned>(v) >> 6)] >>
                (v & 63)) &
               1u;
    }

    // Throws ContractError on out-of-range endpoints or a self loop.
    // Adding an existing edge is a no-op.
    void add_edge(int u, int v);

    int edge_count() const;
    // Pairs (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

  private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// A bijection from positions to vertices: perm[i] is the vertex placed at
// position i.
struct VertexOrdering {
    std::vector<int> perm;

    static VertexOrdering identity(int n);
    int size() const { return static_cast<int>(perm.size()); }
    // Throws ContractError unless perm is a permutation of 0..n-1.
    void validate(int n) const;
};

// Adjacency matrix of (g, sigma) with ones added on the diagonal. Indices
// are sigma positions, not vertex labels.
class AugmentedMatrix {
  public:
    AugmentedMatrix() = default;
    AugmentedMatrix(const Graph& g, const VertexOrdering& sigma);

    int size() const { return n_; }

    bool at(int i, int j) const {
        return (bits_[static_cast<std::size_t>(i) * words_ + (static_cast<unsigned>(j) >> 6)] >>
                (j & 63)) &
               1u;
    }

    // Least / greatest column holding a one in the given row; the diagonal
    // one guarantees both exist.
    int first_one(int row) const;
    int last_one(int row) const;

  private:
    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Edge-list format: a header line "n <vertex-count>" followed by one
// "u v" line per edge, endpoints 0-based. Blank lines and lines starting
// with '#' are skipped; duplicate edges collapse. Throws ParseError (with a
// 1-based line number) on malformed lines, out-of-range endpoints or self
// loops.
Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
std::string format_graph(const Graph& g);

Graph make_cycle(int n);                       // n >= 3
Graph make_complete(int n);                    // n >= 1
Graph make_complete_bipartite(int m, int n);   // parts {0..m-1} and {m..m+n-1}
Graph make_wheel(int n);                       // cycle 0..n-1 plus the center n
// Spine vertices come first (one per entry of leg_counts, joined in a path),
// then the leaves grouped by spine vertex in spine order.
Graph make_caterpillar(const std::vector<int>& leg_counts);

Graph complement(const Graph& g);
// vertices must be distinct and in range; vertex i of the result is
// vertices[i]. Passing 0..n-1 returns a copy of g.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

}  // namespace mptg
