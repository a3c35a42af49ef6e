#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "trifree/formulas.hpp"

using namespace trifree::formulas;

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(f_triangle(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(f_triangle(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(f_triangle(kMaxParameter + 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(f_gen(-2, 3), std::invalid_argument);
    CHECK_THROWS_AS(resolve_Zd(1), std::invalid_argument);
}

TEST_CASE("unrestricted maximum") {
    CHECK(f_gen(4, 5).value() == 24);
    CHECK(f_gen(3, 7).value() == 24);
    CHECK(f_gen(1, 9).value() == 9);
    CHECK(f_gen(2, 3).value() == 9);
    CHECK(f_gen(5, 11).value() == 61);
    for (long long d = 1; d <= 8; ++d)
        for (long long m = 1; m <= 12; ++m) {
            ExtremalValue v = f_gen(d, m);
            CHECK(v.status == Optimality::ProvenOptimal);
            CHECK(!v.is_interval());
            CHECK(v.value() >= d * m);
            CHECK(v.value() <= (d + 1) * m);
        }
}

TEST_CASE("Z resolution by parity") {
    CHECK(resolve_Zd(2).kind == ZdResolution::Kind::Exact);
    CHECK(resolve_Zd(2).value() == 2);
    CHECK(resolve_Zd(3).value() == 3);
    CHECK(resolve_Zd(4).value() == 5);
    CHECK(resolve_Zd(5).value() == 6);
    CHECK(resolve_Zd(6).value() == 7);
    CHECK(resolve_Zd(8).value() == 10);
    CHECK(resolve_Zd(12).value() == 15);

    ZdResolution z7 = resolve_Zd(7);
    CHECK(z7.kind == ZdResolution::Kind::Interval);
    CHECK(!z7.resolved());
    CHECK(z7.lo == 8);
    CHECK(z7.hi == 10);

    ZdResolution z9 = resolve_Zd(9);
    CHECK(z9.lo == 10);
    CHECK(z9.hi == 12);

    ZdResolution z9c = resolve_Zd(9, true);
    CHECK(z9c.kind == ZdResolution::Kind::ConjecturedExact);
    CHECK(z9c.value() == 12);

    // Even d stays exact regardless of the conjecture flag.
    CHECK(resolve_Zd(8, true).kind == ZdResolution::Kind::Exact);
}

TEST_CASE("Z bounds hold on a sweep") {
    for (int d = 4; d <= 40; ++d) {
        ZdResolution z = resolve_Zd(d);
        CHECK(z.lo >= d + 1);
        CHECK(z.lo <= z.hi);
        CHECK(z.hi <= 5 * (d + 1) / 4);
    }
}

TEST_CASE("closed form by case") {
    CHECK(f_triangle(1, 7).value() == 7);
    CHECK(f_triangle(1, 7).case_tag == "d=1");
    CHECK(f_triangle(5, 2).value() == 10);
    CHECK(f_triangle(5, 2).case_tag == "d>m");
    CHECK(f_triangle(3, 3).value() == 10);
    CHECK(f_triangle(3, 3).case_tag == "d=m");
    CHECK(f_triangle(2, 2).value() == 5);
    CHECK(f_triangle(2, 3).value() == 7);
    CHECK(f_triangle(4, 5).value() == 22);
    CHECK(f_triangle(5, 11).value() == 58);
    CHECK(f_triangle(6, 13).value() == 82);
    CHECK(f_triangle(6, 13).status == Optimality::ProvenOptimal);
    CHECK(f_triangle(7, 10).value() == 73);
    CHECK(f_triangle(7, 10).status == Optimality::ProvenOptimal);
}

TEST_CASE("decomposition fields") {
    ExtremalValue v = f_triangle(4, 9);
    CHECK(v.value() == 39);
    CHECK(v.has_decomposition);
    CHECK(v.k == 1);
    CHECK(v.r == 4);
    CHECK(v.z_used == 5);
    CHECK(9 == v.k * v.z_used + v.r);
}

TEST_CASE("open domain produces intervals without the flag") {
    ExtremalValue v = f_triangle(9, 30);
    CHECK(v.is_interval());
    CHECK(v.value_lo == 278);
    CHECK(v.value_hi == 282);
    CHECK(v.status == Optimality::Unknown);
    CHECK_THROWS_AS(v.value(), std::logic_error);

    ExtremalValue c = f_triangle(9, 30, true);
    CHECK(!c.is_interval());
    CHECK(c.value() == 278);
    CHECK(c.status == Optimality::ConjecturedOptimal);
}

TEST_CASE("even d outside the proven window is single valued but unproven") {
    // Z(8) = 10 is exact, yet interior m in (d, Z) has no matching theorem.
    ExtremalValue v = f_triangle(8, 9);
    CHECK(!v.is_interval());
    CHECK(v.status == Optimality::Unknown);
    ExtremalValue c = f_triangle(8, 9, true);
    CHECK(c.status == Optimality::ConjecturedOptimal);
    CHECK(c.value() == v.value());
}

TEST_CASE("status matches the proven domain") {
    for (long long d = 1; d <= 12; ++d)
        for (long long m = 1; m <= 40; ++m) {
            ExtremalValue v = f_triangle(d, m);
            if (in_proven_domain(d, m)) {
                CHECK(v.status == Optimality::ProvenOptimal);
                CHECK(!v.is_interval());
            } else {
                CHECK(v.status == Optimality::Unknown);
            }
            CHECK(v.value_lo >= d * m);
            CHECK(v.value_hi <= f_gen(d, m).value());
            CHECK(v.value_lo <= v.value_hi);
        }
}

TEST_CASE("proven domain membership") {
    CHECK(in_proven_domain(1, 100));
    CHECK(in_proven_domain(9, 3));
    CHECK(in_proven_domain(6, 50));
    CHECK(in_proven_domain(7, 10));   // window [10, 14)
    CHECK(in_proven_domain(7, 13));
    CHECK(!in_proven_domain(7, 14));  // m >= 2d
    CHECK(!in_proven_domain(7, 8));   // interior gap below the window
    CHECK(in_proven_domain(8, 10));   // window [10, 16)
    CHECK(!in_proven_domain(8, 9));
    CHECK(!in_proven_domain(9, 30));
}

TEST_CASE("monotonicity inside the proven domain") {
    for (long long d = 1; d <= 10; ++d)
        for (long long m = 1; m < 40; ++m) {
            if (!in_proven_domain(d, m) || !in_proven_domain(d, m + 1)) continue;
            CHECK(f_triangle(d, m).value() <= f_triangle(d, m + 1).value());
        }
    for (long long d = 1; d < 10; ++d)
        for (long long m = 1; m <= 40; ++m) {
            if (!in_proven_domain(d, m) || !in_proven_domain(d + 1, m)) continue;
            CHECK(f_triangle(d, m).value() <= f_triangle(d + 1, m).value());
        }
}

TEST_CASE("component surplus values") {
    CHECK(g_triangle(5, 5).value == 1);
    CHECK(!g_triangle(5, 5).conjectured);
    CHECK(g_triangle(6, 7).value == 3);
    CHECK(!g_triangle(6, 7).conjectured);
    CHECK(g_triangle(9, 10).value == 2);
    CHECK(g_triangle(9, 10).conjectured);
    CHECK(g_triangle(9, 12).value == 4);  // top slot under the ansatz
    CHECK(g_triangle(9, 12).conjectured);
    CHECK(g_triangle(8, 9).value == 2);
    CHECK(g_triangle(8, 9).conjectured);
    CHECK(g_triangle(8, 10).value == 4);
    CHECK(!g_triangle(8, 10).conjectured);
    CHECK_THROWS_AS(g_triangle(5, 4), std::domain_error);
    CHECK_THROWS_AS(g_triangle(5, 7), std::domain_error);
}

TEST_CASE("gap to the unrestricted maximum") {
    CHECK(h_triangle(4, 4) == 3);
    CHECK(h_triangle(2, 7) == 4);
    CHECK(h_triangle(1, 5) == 0);
    CHECK(h_triangle(5, 11) == 3);
    CHECK(h_triangle(6, 13) == 8);
    CHECK(h_triangle(3, 1) == 0);
    CHECK(h_triangle(4, 2) == 2);
    CHECK(h_triangle(5, 5) == 1);
    CHECK_THROWS_AS(h_triangle(9, 30), std::domain_error);
    CHECK_THROWS_AS(h_triangle(7, 8), std::domain_error);
}

TEST_CASE("gap expression equals the subtraction everywhere proven") {
    for (long long d = 1; d <= 10; ++d)
        for (long long m = 1; m <= 40; ++m) {
            if (!in_proven_domain(d, m)) continue;
            CHECK(h_triangle(d, m) == f_gen(d, m).value() - f_triangle(d, m).value());
        }
}

TEST_CASE("optimality labels render") {
    CHECK(to_string(Optimality::ProvenOptimal) == "proven");
    CHECK(to_string(Optimality::ConjecturedOptimal) == "conjectured");
    CHECK(to_string(Optimality::Unknown) == "unknown");
}
