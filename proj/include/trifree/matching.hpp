#pragma once

#include <utility>
#include <vector>

#include "trifree/graph.hpp"

namespace trifree {

// A matching: pairwise vertex-disjoint edges of a host graph.
struct Matching {
    std::vector<std::pair<int, int>> edges;
    int size() const noexcept { return static_cast<int>(edges.size()); }
};

// Maximum matching on a general graph (blossom-contracting augmenting search).
Matching maximum_matching(const Graph& g);
int matching_number(const Graph& g);
bool is_valid_matching(const Graph& g, const Matching& m);
bool has_perfect_matching(const Graph& g);

// Every single-vertex deletion leaves a perfectly matchable graph.
// Requires odd order >= 3 and connectivity; K_1 does not count.
bool is_factor_critical(const Graph& g);

}  // namespace trifree
