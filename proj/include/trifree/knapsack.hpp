#pragma once

#include <map>

#include "trifree/formulas.hpp"

namespace trifree::knapsack {

// An optimal multiplicity vector for the component-composition model:
// maximize sum utility(i) * x_i subject to sum i * x_i <= m, x_i >= 0.
struct KnapsackSolution {
    std::map<int, long long> counts;  // every key in [d, z_top], zeros kept
    long long objective = 0;
    long long capacity_used = 0;
};

// Exact unbounded-knapsack DP over capacity m. utilities must have contiguous
// integer keys d, d+1, ..., z_top with nonnegative values. Ties are broken
// toward the lexicographically largest (x_{z_top}, x_d).
KnapsackSolution solve_model2(long long d, long long m,
                              const std::map<int, long long>& utilities);

// d*m plus the model optimum with per-component surpluses g(d, i) as the
// utility table. Status is the weakest among the utilities the optimum uses.
formulas::ExtremalValue f_via_model1(long long d, long long m,
                                     bool assume_conjectures = false);

// True iff at most one multiplicity below the top slot is nonzero and it
// equals 1 (structure of optima under the interpolation utilities).
bool check_optimum_structure(const KnapsackSolution& sol, int d);

}  // namespace trifree::knapsack
