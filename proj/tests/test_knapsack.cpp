#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "trifree/formulas.hpp"
#include "trifree/knapsack.hpp"

using namespace trifree;
using namespace trifree::knapsack;

namespace {

// Independent oracle: enumerate every multiset of item sizes that fits the
// capacity and keep the best objective.
long long best_by_enumeration(long long capacity, const std::map<int, long long>& utilities) {
    std::vector<std::pair<int, long long>> items(utilities.begin(), utilities.end());
    long long best = 0;
    auto rec = [&](auto&& self, size_t idx, long long left, long long value) -> void {
        best = std::max(best, value);
        if (idx == items.size()) return;
        self(self, idx + 1, left, value);
        if (items[idx].first <= left)
            self(self, idx, left - items[idx].first, value + items[idx].second);
    };
    rec(rec, 0, capacity, 0);
    return best;
}

}  // namespace

TEST_CASE("dp matches frozen examples") {
    KnapsackSolution s = solve_model2(4, 9, {{4, 1}, {5, 2}});
    CHECK(s.objective == 3);
    CHECK(s.counts.at(4) == 1);
    CHECK(s.counts.at(5) == 1);
    CHECK(s.capacity_used == 9);

    KnapsackSolution t = solve_model2(2, 7, {{2, 1}});
    CHECK(t.objective == 3);
    CHECK(t.counts.at(2) == 3);
    CHECK(t.capacity_used == 6);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(solve_model2(5, 4, {{5, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(solve_model2(1, 4, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(solve_model2(3, 8, {{3, 1}, {5, 2}}), std::invalid_argument);  // gap at 4
    CHECK_THROWS_AS(solve_model2(3, 8, {{4, 1}}), std::invalid_argument);  // must start at d
    CHECK_THROWS_AS(solve_model2(3, 8, {{3, -1}}), std::invalid_argument);
    CHECK_THROWS_AS(solve_model2(3, 8, {}), std::invalid_argument);
}

TEST_CASE("dp equals exhaustive enumeration") {
    for (long long m = 2; m <= 30; ++m) {
        std::map<int, long long> u1 = {{2, 1}};
        CHECK(solve_model2(2, m, u1).objective == best_by_enumeration(m, u1));
        if (m >= 4) {
            std::map<int, long long> u2 = {{4, 1}, {5, 2}};
            CHECK(solve_model2(4, m, u2).objective == best_by_enumeration(m, u2));
        }
        if (m >= 6) {
            std::map<int, long long> u3 = {{6, 1}, {7, 3}};
            CHECK(solve_model2(6, m, u3).objective == best_by_enumeration(m, u3));
        }
        if (m >= 7) {
            std::map<int, long long> u4 = {{7, 1}, {8, 2}, {9, 3}, {10, 3}};
            CHECK(solve_model2(7, m, u4).objective == best_by_enumeration(m, u4));
        }
    }
}

TEST_CASE("reconstruction is consistent") {
    for (long long m = 5; m <= 40; ++m) {
        KnapsackSolution s = solve_model2(5, m, {{5, 1}, {6, 2}});
        long long used = 0, value = 0;
        for (auto [size, count] : s.counts) {
            used += static_cast<long long>(size) * count;
            value += count * (size == 5 ? 1 : 2);
        }
        CHECK(used == s.capacity_used);
        CHECK(used <= m);
        CHECK(value == s.objective);
    }
}

TEST_CASE("model 1 equals the closed form") {
    CHECK(f_via_model1(3, 8).value() == 26);
    CHECK(f_via_model1(6, 13).value() == 82);
    CHECK(f_via_model1(2, 2).value() == 5);
    for (long long d = 2; d <= 6; ++d)
        for (long long m = d; m <= 40; ++m) {
            formulas::ExtremalValue lhs = f_via_model1(d, m);
            formulas::ExtremalValue rhs = formulas::f_triangle(d, m);
            CHECK(lhs.value() == rhs.value_lo);
            CHECK(rhs.value_hi == rhs.value_lo);
        }
}

TEST_CASE("model 1 needs a resolved component ladder") {
    CHECK_THROWS_AS(f_via_model1(7, 20), std::domain_error);
    formulas::ExtremalValue v = f_via_model1(7, 20, true);
    CHECK(v.status == formulas::Optimality::ConjecturedOptimal);
    CHECK(v.value() == formulas::f_triangle(7, 20, true).value());
}

TEST_CASE("model 1 marks conjectured ladders only when they matter") {
    // d = 8: only the proven slots i = d and i = Z(d) are ever used.
    formulas::ExtremalValue v = f_via_model1(8, 26);
    CHECK(v.value() == formulas::f_triangle(8, 26).value_lo);
}

TEST_CASE("optimum structure predicate") {
    KnapsackSolution a;
    a.counts = {{5, 1}, {7, 2}};
    CHECK(check_optimum_structure(a, 5));
    KnapsackSolution b;
    b.counts = {{4, 1}, {5, 1}};
    CHECK(check_optimum_structure(b, 4));
    KnapsackSolution c;
    c.counts = {{9, 2}, {12, 1}};
    CHECK(!check_optimum_structure(c, 9));
    KnapsackSolution d;
    d.counts = {{6, 0}, {7, 4}};
    CHECK(check_optimum_structure(d, 6));
}
