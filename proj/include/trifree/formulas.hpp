#pragma once

#include <string>

namespace trifree::formulas {

// Parameter cap; all closed forms stay well inside 64-bit range below it.
inline constexpr long long kMaxParameter = 1'000'000;

enum class Optimality { ProvenOptimal, ConjecturedOptimal, Unknown };

std::string to_string(Optimality s);

// Z(d): the smallest nu admitting a d-regular (d even) or almost d-regular
// (d odd) triangle-free factor-critical graph with matching number nu.
struct ZdResolution {
    enum class Kind { Exact, Interval, ConjecturedExact };

    int d = 0;
    Kind kind = Kind::Exact;
    int lo = 0;
    int hi = 0;
    std::string provenance;

    bool resolved() const { return kind != Kind::Interval; }
    int value() const;  // requires resolved()
};

// assume_conjecture upgrades unresolved odd d >= 7 to the floor(5(d+1)/4) ansatz.
ZdResolution resolve_Zd(int d, bool assume_conjecture = false);

// A closed-form extremal value. value_lo == value_hi unless the value depends
// on an unresolved Z(d), in which case [value_lo, value_hi] covers the formula
// evaluated at every admissible Z(d).
struct ExtremalValue {
    long long value_lo = 0;
    long long value_hi = 0;
    Optimality status = Optimality::ProvenOptimal;
    std::string case_tag;
    bool has_decomposition = false;  // m = k*Z + r against the Z used
    long long k = 0;
    long long r = 0;
    int z_used = 0;

    bool is_interval() const { return value_lo != value_hi; }
    long long value() const;  // requires !is_interval()
};

// Max edges, max degree <= d and matching number <= m, no triangle-free
// restriction: d*m + floor(d/2)*floor(m/ceil(d/2)).
ExtremalValue f_gen(long long d, long long m);

// Max edges among triangle-free graphs with max degree <= d, matching
// number <= m. Unified form: with m = k*Z(d) + r, 0 <= r < Z(d),
//   f = d*m + k*floor(d/2) + (r - d + 1 if r >= d else 0).
ExtremalValue f_triangle(long long d, long long m, bool assume_conjectures = false);

// Per-component surplus g(d, i) = f_triangle(d, i) - d*i for d <= i <= Z(d).
struct SurplusValue {
    long long value = 0;
    bool conjectured = false;
};
SurplusValue g_triangle(int d, int i, bool assume_conjectures = false);

// Gap h(d, m) = f_gen - f_triangle, by closed case table. Only defined on the
// proven domain; throws std::domain_error elsewhere.
long long h_triangle(long long d, long long m);

// True where f_triangle(d, m) is settled unconditionally:
// d >= m, or d <= 6, or (the provable upper bound on Z(d)) <= m < 2d.
bool in_proven_domain(long long d, long long m);

}  // namespace trifree::formulas
