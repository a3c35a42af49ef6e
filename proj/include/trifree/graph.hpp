#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace trifree {

// Undirected simple graph on vertices 0..n-1. Adjacency is one bit row per
// vertex, so common-neighbor tests are word-parallel AND operations.
// No self loops; rows stay symmetric. Treated as immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
    // rows[v] is a bit mask over 0..n-1; n <= 64. Must be symmetric, diagonal-free.
    static Graph from_bit_rows(int n, std::span<const std::uint64_t> rows);
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);

    int order() const noexcept { return n_; }
    long long size() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    bool common_neighbor(int u, int v) const;
    std::vector<std::pair<int, int>> edge_list() const;  // u < v, lexicographic

    std::span<const std::uint64_t> row(int v) const;
    int words_per_row() const noexcept { return wpr_; }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int wpr_ = 0;
    std::vector<std::uint64_t> bits_;
};

int max_degree(const Graph& g);
int min_degree(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

Graph remove_vertex(const Graph& g, int v);
Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_union(std::initializer_list<Graph> parts);

// Largest graph we will materialize as a bit matrix (memory is O(n^2) bits).
inline constexpr int kMaxMaterializedVertices = 16384;

}  // namespace trifree
