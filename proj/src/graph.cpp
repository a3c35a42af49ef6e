#include "trifree/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace trifree {

namespace {

int words_for(int n) { return n <= 0 ? 0 : (n + 63) / 64; }

}  // namespace

Graph::Graph(int n) : n_(n), wpr_(words_for(n)) {
    if (n < 0) throw std::invalid_argument("Graph: negative order");
    if (n > kMaxMaterializedVertices)
        throw std::invalid_argument("Graph: order " + std::to_string(n) + " exceeds materialization limit " +
                                    std::to_string(kMaxMaterializedVertices));
    bits_.assign(static_cast<std::size_t>(n_) * wpr_, 0);
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::from_bit_rows(int n, std::span<const std::uint64_t> rows) {
    if (n < 0 || n > 64) throw std::invalid_argument("from_bit_rows: order must be in [0,64]");
    if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("from_bit_rows: row count mismatch");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.bits_[static_cast<std::size_t>(v)] = rows[v];
    for (int v = 0; v < n; ++v) {
        if (n < 64 && (rows[v] >> n) != 0) throw std::invalid_argument("from_bit_rows: bits beyond order");
        if (rows[v] & (std::uint64_t{1} << v)) throw std::invalid_argument("from_bit_rows: self loop");
        for (int u = 0; u < v; ++u) {
            bool uv = (rows[u] >> v) & 1;
            bool vu = (rows[v] >> u) & 1;
            if (uv != vu) throw std::invalid_argument("from_bit_rows: asymmetric rows");
        }
    }
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex index " + std::to_string(v) + " out of range");
}

long long Graph::size() const {
    long long total = 0;
    for (const std::uint64_t w : bits_) total += std::popcount(w);
    return total / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (bits_[static_cast<std::size_t>(u) * wpr_ + v / 64] >> (v % 64)) & 1;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("add_edge: self loop");
    bits_[static_cast<std::size_t>(u) * wpr_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[static_cast<std::size_t>(v) * wpr_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    bits_[static_cast<std::size_t>(u) * wpr_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    bits_[static_cast<std::size_t>(v) * wpr_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

int Graph::degree(int v) const {
    check_vertex(v);
    int deg = 0;
    for (int w = 0; w < wpr_; ++w) deg += std::popcount(bits_[static_cast<std::size_t>(v) * wpr_ + w]);
    return deg;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int w = 0; w < wpr_; ++w) {
        std::uint64_t word = bits_[static_cast<std::size_t>(v) * wpr_ + w];
        while (word) {
            int bit = std::countr_zero(word);
            out.push_back(w * 64 + bit);
            word &= word - 1;
        }
    }
    return out;
}

bool Graph::common_neighbor(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const std::uint64_t* ru = bits_.data() + static_cast<std::size_t>(u) * wpr_;
    const std::uint64_t* rv = bits_.data() + static_cast<std::size_t>(v) * wpr_;
    for (int w = 0; w < wpr_; ++w)
        if (ru[w] & rv[w]) return true;
    return false;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::span<const std::uint64_t> Graph::row(int v) const {
    check_vertex(v);
    return {bits_.data() + static_cast<std::size_t>(v) * wpr_, static_cast<std::size_t>(wpr_)};
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

int min_degree(const Graph& g) {
    if (g.order() == 0) return 0;
    int best = g.degree(0);
    for (int v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

bool is_triangle_free(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            if (g.common_neighbor(u, v)) return false;
        }
    return true;
}

bool is_bipartite(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (color[u] < 0) {
                    color[u] = color[v] ^ 1;
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> comps;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comps.back().push_back(v);
            for (int u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.order() <= 1 || connected_components(g).size() == 1;
}

Graph remove_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("remove_vertex: index out of range");
    Graph out(g.order() - 1);
    auto shift = [v](int x) { return x < v ? x : x - 1; };
    for (auto [a, b] : g.edge_list())
        if (a != v && b != v) out.add_edge(shift(a), shift(b));
    return out;
}

Graph disjoint_union(std::span<const Graph> parts) {
    long long total = 0;
    for (const Graph& g : parts) total += g.order();
    if (total > kMaxMaterializedVertices)
        throw std::invalid_argument("disjoint_union: combined order exceeds materialization limit");
    Graph out(static_cast<int>(total));
    int offset = 0;
    for (const Graph& g : parts) {
        for (auto [u, v] : g.edge_list()) out.add_edge(offset + u, offset + v);
        offset += g.order();
    }
    return out;
}

Graph disjoint_union(std::initializer_list<Graph> parts) {
    return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

}  // namespace trifree
