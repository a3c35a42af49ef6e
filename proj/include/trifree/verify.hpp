#pragma once

#include "trifree/graph.hpp"

namespace trifree {

// Membership check for the class: triangle-free, max degree <= d, matching
// number <= m. vizing_bound is the counting bound |E| <= (d+1)*m; any member
// of the class satisfies it.
struct MembershipReport {
    int d = 0;
    int m = 0;
    long long edges = 0;
    int max_degree = 0;
    int matching_number = 0;
    bool triangle_free = false;
    bool degree_ok = false;
    bool matching_ok = false;
    long long vizing_bound = 0;
    bool vizing_ok = false;

    bool pass() const { return triangle_free && degree_ok && matching_ok; }
};

MembershipReport verify_membership(const Graph& g, int d, int m);

}  // namespace trifree
