#include "trifree/verify.hpp"

#include <stdexcept>

#include "trifree/matching.hpp"

namespace trifree {

MembershipReport verify_membership(const Graph& g, int d, int m) {
    if (d < 1 || m < 1) throw std::invalid_argument("verify_membership: need d >= 1 and m >= 1");
    MembershipReport r;
    r.d = d;
    r.m = m;
    r.edges = g.size();
    r.max_degree = max_degree(g);
    r.matching_number = matching_number(g);
    r.triangle_free = is_triangle_free(g);
    r.degree_ok = r.max_degree <= d;
    r.matching_ok = r.matching_number <= m;
    r.vizing_bound = static_cast<long long>(d + 1) * m;
    r.vizing_ok = r.edges <= r.vizing_bound;
    return r;
}

}  // namespace trifree
