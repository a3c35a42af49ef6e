#include "trifree/knapsack.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace trifree::knapsack {

namespace {

// Cell value ordered lexicographically by (objective, x_ztop, x_d).
struct Cell {
    std::array<long long, 3> key{0, 0, 0};
    int choice = -1;  // -1 waste from c-1, otherwise the item weight used

    bool operator<(const Cell& o) const { return key < o.key; }
};

}  // namespace

KnapsackSolution solve_model2(long long d, long long m,
                              const std::map<int, long long>& utilities) {
    if (d < 2 || d > formulas::kMaxParameter)
        throw std::invalid_argument("solve_model2 requires 2 <= d <= " +
                                    std::to_string(formulas::kMaxParameter));
    if (m < d || m > formulas::kMaxParameter)
        throw std::invalid_argument("solve_model2 requires d <= m <= " +
                                    std::to_string(formulas::kMaxParameter) + ", got m = " +
                                    std::to_string(m));
    if (utilities.empty() || utilities.begin()->first != d)
        throw std::invalid_argument("utility table must start at i = d");
    int z_top = utilities.rbegin()->first;
    {
        int expect = static_cast<int>(d);
        for (const auto& [i, u] : utilities) {
            if (i != expect++)
                throw std::invalid_argument("utility table keys must be contiguous from d");
            if (u < 0) throw std::invalid_argument("utilities must be nonnegative");
        }
    }

    // dp[c]: lex-best (objective, x_ztop, x_d) over vectors of weight <= c.
    // Lex comparison commutes with adding a common suffix, so per-capacity
    // maximization is globally correct.
    std::vector<Cell> dp(static_cast<size_t>(m) + 1);
    for (long long c = 1; c <= m; ++c) {
        Cell best = dp[c - 1];
        best.choice = -1;
        for (const auto& [i, u] : utilities) {
            if (i > c) break;
            Cell cand = dp[c - i];
            cand.key[0] += u;
            if (i == z_top) cand.key[1] += 1;
            if (i == d) cand.key[2] += 1;
            cand.choice = i;
            if (best < cand) best = cand;
        }
        dp[c] = best;
    }

    KnapsackSolution sol;
    for (const auto& [i, u] : utilities) sol.counts[i] = 0;
    sol.objective = dp[m].key[0];
    for (long long c = m; c > 0;) {
        int ch = dp[c].choice;
        if (ch < 0) {
            c -= 1;
        } else {
            sol.counts[ch] += 1;
            sol.capacity_used += ch;
            c -= ch;
        }
    }
    return sol;
}

formulas::ExtremalValue f_via_model1(long long d, long long m, bool assume_conjectures) {
    if (d < 2) throw std::invalid_argument("f_via_model1 requires d >= 2");
    if (m < d) throw std::invalid_argument("f_via_model1 requires m >= d");
    formulas::ZdResolution z = formulas::resolve_Zd(static_cast<int>(d), assume_conjectures);
    if (!z.resolved())
        throw std::domain_error("Z(" + std::to_string(d) +
                                ") is unresolved; pass assume_conjectures to use the ansatz");

    std::map<int, long long> utilities;
    std::map<int, bool> conjectured;
    for (int i = static_cast<int>(d); i <= z.value(); ++i) {
        formulas::SurplusValue s = formulas::g_triangle(static_cast<int>(d), i, assume_conjectures);
        utilities[i] = s.value;
        conjectured[i] = s.conjectured;
    }

    KnapsackSolution sol = solve_model2(d, m, utilities);
    formulas::ExtremalValue v;
    v.value_lo = v.value_hi = d * m + sol.objective;
    v.case_tag = "model1";
    v.status = formulas::Optimality::ProvenOptimal;
    for (const auto& [i, x] : sol.counts)
        if (x > 0 && conjectured[i]) v.status = formulas::Optimality::ConjecturedOptimal;
    return v;
}

bool check_optimum_structure(const KnapsackSolution& sol, int d) {
    if (sol.counts.empty()) throw std::invalid_argument("empty solution");
    if (sol.counts.begin()->first != d)
        throw std::invalid_argument("solution does not start at i = d");
    int z_top = sol.counts.rbegin()->first;
    long long below = 0;
    for (const auto& [i, x] : sol.counts)
        if (i < z_top) below += x;
    return below <= 1;
}

}  // namespace trifree::knapsack
