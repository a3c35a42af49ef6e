#include "trifree/matching.hpp"

#include <algorithm>
#include <numeric>

namespace trifree {

namespace {

// Blossom-contracting augmenting search, O(V^3). base_[v] is the root of the
// contracted blossom containing v; parent_ holds the alternating forest.
class BlossomMatcher {
public:
    explicit BlossomMatcher(const Graph& g)
        : n_(g.order()),
          match_(n_, -1),
          parent_(n_, -1),
          base_(n_, 0),
          in_queue_(n_, 0),
          in_blossom_(n_, 0) {
        adj_.reserve(n_);
        for (int v = 0; v < n_; ++v) adj_.push_back(g.neighbors(v));
    }

    std::vector<int> run() {
        greedy_seed();
        for (int v = 0; v < n_; ++v)
            if (match_[v] < 0) augment_from(v);
        return match_;
    }

private:
    void greedy_seed() {
        for (int v = 0; v < n_; ++v)
            if (match_[v] < 0)
                for (int u : adj_[v])
                    if (match_[u] < 0) {
                        match_[v] = u;
                        match_[u] = v;
                        break;
                    }
    }

    int lowest_common_base(int a, int b) {
        std::vector<char> mark(n_, 0);
        int v = a;
        while (true) {
            v = base_[v];
            mark[v] = 1;
            if (match_[v] < 0) break;
            v = parent_[match_[v]];
        }
        v = b;
        while (true) {
            v = base_[v];
            if (mark[v]) return v;
            v = parent_[match_[v]];
        }
    }

    void mark_path(int v, int stop, int child) {
        while (base_[v] != stop) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    bool augment_from(int root) {
        std::fill(in_queue_.begin(), in_queue_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        std::vector<int> queue;
        queue.push_back(root);
        in_queue_[root] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
                    int stop = lowest_common_base(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, stop, to);
                    mark_path(to, stop, v);
                    for (int i = 0; i < n_; ++i)
                        if (in_blossom_[base_[i]]) {
                            base_[i] = stop;
                            if (!in_queue_[i]) {
                                in_queue_[i] = 1;
                                queue.push_back(i);
                            }
                        }
                } else if (parent_[to] < 0) {
                    parent_[to] = v;
                    if (match_[to] < 0) {
                        flip(to);
                        return true;
                    }
                    int next = match_[to];
                    if (!in_queue_[next]) {
                        in_queue_[next] = 1;
                        queue.push_back(next);
                    }
                }
            }
        }
        return false;
    }

    void flip(int v) {
        while (v >= 0) {
            int pv = parent_[v];
            int next = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = next;
        }
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> in_queue_, in_blossom_;
};

}  // namespace

Matching maximum_matching(const Graph& g) {
    std::vector<int> mate = BlossomMatcher(g).run();
    Matching m;
    for (int v = 0; v < g.order(); ++v)
        if (mate[v] > v) m.edges.emplace_back(v, mate[v]);
    return m;
}

int matching_number(const Graph& g) { return maximum_matching(g).size(); }

bool is_valid_matching(const Graph& g, const Matching& m) {
    std::vector<char> used(g.order(), 0);
    for (auto [u, v] : m.edges) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v) return false;
        if (!g.has_edge(u, v)) return false;
        if (used[u] || used[v]) return false;
        used[u] = used[v] = 1;
    }
    return true;
}

bool has_perfect_matching(const Graph& g) {
    return g.order() % 2 == 0 && matching_number(g) * 2 == g.order();
}

bool is_factor_critical(const Graph& g) {
    const int n = g.order();
    if (n < 3 || n % 2 == 0) return false;
    if (!is_connected(g)) return false;
    for (int v = 0; v < n; ++v)
        if (matching_number(remove_vertex(g, v)) * 2 != n - 1) return false;
    return true;
}

}  // namespace trifree
