#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trifree/constructions.hpp"
#include "trifree/formulas.hpp"
#include "trifree/graph.hpp"

namespace trifree::oracle {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumBudget {
    int max_vertices = 13;
};

enum class DegreeProfile { All, Regular, AlmostRegular };

// Regular and AlmostRegular read the target degree d from max_degree and
// apply exactly at the final vertex count.
struct EnumFilter {
    int n = 1;
    int max_degree = -1;  // -1 unbounded
    bool triangle_free = true;
    bool connected = false;
    DegreeProfile profile = DegreeProfile::All;
};

// Yields exactly one representative per isomorphism class passing the filter,
// by incremental vertex augmentation with certificate deduplication and
// degree/triangle/connectivity pruning. The sink returns false to stop early.
void enumerate(const EnumFilter& filter, const std::function<bool(const Graph&)>& sink,
               EnumBudget budget = {});

std::vector<Graph> enumerate_all(const EnumFilter& filter, EnumBudget budget = {});

struct OracleRecord {
    long long d = 0;
    long long m = 0;
    long long best_edges = -1;
    Graph witness;
    int vertex_bound_used = 0;
    bool exhaustive = false;
};

std::string to_json(const OracleRecord& rec);

// Max edges over isolated-vertex-free triangle-free graphs with max degree
// <= d and matching number <= m, across all orders up to min(vertex_cap, 2dm).
// Exhaustive iff the cap covers 2dm: in such a graph the <= 2m matched
// vertices spend one slot on their mate, so at most 2m(d-1) unmatched
// neighbors exist and |V| <= 2m + 2m(d-1) = 2dm.
OracleRecord brute_force_f(int d, int m, int vertex_cap, EnumBudget budget = {});

// Max edges over connected triangle-free graphs on exactly 2i+1 vertices with
// max degree <= d and matching number exactly i.
OracleRecord brute_force_component_f(int d, int i, EnumBudget budget = {});

// d*m plus the component-composition optimum using oracle-derived utilities
// brute_force_component_f(d, i) - d*i on i in [d, min(Z(d), m)].
long long oracle_f_via_components(int d, int m, EnumBudget budget = {});

// Smallest nu <= nu_max admitting a (almost) d-regular triangle-free
// factor-critical graph, by exhaustive enumeration on 2 nu + 1 vertices.
// Exact when found; otherwise the interval combining the refutation with the
// closed-form bounds.
formulas::ZdResolution search_Zd(int d, int nu_max, EnumBudget budget = {});

// Number of isomorphism classes of (almost) d-regular triangle-free
// factor-critical graphs with the given matching number.
long long count_witnesses(int d, int nu, EnumBudget budget = {});

// Non-exhaustive scan over the blow-up candidate family only.
struct RestrictedScan {
    int d = 0;
    int nu_lo = 0;
    int nu_hi = 0;
    int smallest_found = -1;  // -1 when the family has no witness in range
    bool exhaustive = false;  // always false by construction
};

RestrictedScan restricted_Zd_scan(int d, int nu_lo, int nu_hi,
                                  constructions::SearchBudget budget = {});

}  // namespace trifree::oracle
