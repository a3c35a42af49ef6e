#include "trifree/formulas.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace trifree::formulas {

namespace {

void check_params(long long d, long long m) {
    if (d < 1 || d > kMaxParameter)
        throw std::invalid_argument("d must be in [1, " + std::to_string(kMaxParameter) +
                                    "], got " + std::to_string(d));
    if (m < 1 || m > kMaxParameter)
        throw std::invalid_argument("m must be in [1, " + std::to_string(kMaxParameter) +
                                    "], got " + std::to_string(m));
}

// Unified closed form at a fixed Z: m = k*Z + r, 0 <= r < Z.
// Returns d*m + k*floor(d/2), plus r - d + 1 when the remainder reaches d.
long long unified_at(long long d, long long m, long long z, long long* out_k = nullptr,
                     long long* out_r = nullptr) {
    long long k = m / z;
    long long r = m % z;
    if (out_k) *out_k = k;
    if (out_r) *out_r = r;
    long long v = d * m + k * (d / 2);
    if (r >= d) v += r - d + 1;
    return v;
}

// Largest Z(d) value that is proved attainable (upper end of the interval).
int zd_hi_provable(int d) {
    if (d % 2 == 0) return (5 * d) / 4;
    return (5 * (d + 1)) / 4;
}

}  // namespace

std::string to_string(Optimality s) {
    switch (s) {
        case Optimality::ProvenOptimal: return "proven";
        case Optimality::ConjecturedOptimal: return "conjectured";
        case Optimality::Unknown: return "unknown";
    }
    return "unknown";
}

int ZdResolution::value() const {
    if (!resolved())
        throw std::logic_error("Z(" + std::to_string(d) + ") is only bracketed in [" +
                               std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return lo;
}

ZdResolution resolve_Zd(int d, bool assume_conjecture) {
    if (d < 2 || d > kMaxParameter)
        throw std::invalid_argument("Z(d) requires 2 <= d <= " + std::to_string(kMaxParameter) +
                                    ", got " + std::to_string(d));
    ZdResolution z;
    z.d = d;
    if (d == 2 || d == 3) {
        z.kind = ZdResolution::Kind::Exact;
        z.lo = z.hi = d;
        z.provenance = "exact (odd cycle C_" + std::to_string(2 * d + 1) + ")";
        return z;
    }
    if (d == 4) {
        z.kind = ZdResolution::Kind::Exact;
        z.lo = z.hi = 5;
        z.provenance = "exact (exhaustive search below 11 vertices)";
        return z;
    }
    if (d == 5) {
        z.kind = ZdResolution::Kind::Exact;
        z.lo = z.hi = 6;
        z.provenance = "exact (exhaustive search below 13 vertices)";
        return z;
    }
    if (d % 2 == 0) {
        z.kind = ZdResolution::Kind::Exact;
        z.lo = z.hi = (5 * d) / 4;
        z.provenance = "exact (pentagon blow-up is tight for even d)";
        return z;
    }
    // Odd d >= 7: only bracketed. Lower end combines the neighborhood bound
    // floor(5(d-1)/4) with factor-critical feasibility nu > d.
    int lo = std::max((5 * (d - 1)) / 4, d + 1);
    int hi = zd_hi_provable(d);
    if (assume_conjecture) {
        z.kind = ZdResolution::Kind::ConjecturedExact;
        z.lo = z.hi = hi;
        z.provenance = "conjectured (pentagon blow-up ansatz for odd d)";
        return z;
    }
    z.kind = ZdResolution::Kind::Interval;
    z.lo = lo;
    z.hi = hi;
    z.provenance = "interval (odd d >= 7 unresolved)";
    return z;
}

long long ExtremalValue::value() const {
    if (is_interval())
        throw std::logic_error("value is only bracketed in [" + std::to_string(value_lo) + ", " +
                               std::to_string(value_hi) + "]");
    return value_lo;
}

ExtremalValue f_gen(long long d, long long m) {
    check_params(d, m);
    ExtremalValue v;
    long long half = d / 2;
    long long ceil_half = (d + 1) / 2;
    v.value_lo = v.value_hi = d * m + half * (m / ceil_half);
    v.status = Optimality::ProvenOptimal;
    v.case_tag = "general";
    return v;
}

ExtremalValue f_triangle(long long d, long long m, bool assume_conjectures) {
    check_params(d, m);
    ExtremalValue v;

    if (d == 1) {
        v.value_lo = v.value_hi = m;
        v.case_tag = "d=1";
        return v;
    }
    if (d > m) {
        v.value_lo = v.value_hi = d * m;
        v.case_tag = "d>m";
        return v;
    }
    if (d == m) {
        v.value_lo = v.value_hi = d * d + 1;
        v.case_tag = "d=m";
        return v;
    }

    // m > d >= 2 from here. Decompose against Z(d) when it is pinned down.
    ZdResolution z = resolve_Zd(static_cast<int>(d), assume_conjectures);
    if (z.resolved()) {
        long long zz = z.value();
        v.value_lo = v.value_hi = unified_at(d, m, zz, &v.k, &v.r);
        v.has_decomposition = true;
        v.z_used = static_cast<int>(zz);
        if (d <= 3)
            v.case_tag = "2<=d<=3, m>d";
        else if (d <= 6)
            v.case_tag = "4<=d<=6, m>d";
        else if (m < 2 * d)
            v.case_tag = "Z(d)<=m<2d";
        else if (m < zz)
            v.case_tag = "open: d<m<Z(d)";
        else
            v.case_tag = "open: m>=2d";
        bool proven = d <= 6 || (zd_hi_provable(static_cast<int>(d)) <= m && m < 2 * d);
        if (proven)
            v.status = Optimality::ProvenOptimal;
        else
            v.status = assume_conjectures ? Optimality::ConjecturedOptimal : Optimality::Unknown;
        return v;
    }

    // Odd d >= 7 without the conjecture flag: sweep every admissible Z.
    long long lo = INT64_MAX, hi = INT64_MIN;
    for (int zz = z.lo; zz <= z.hi; ++zz) {
        long long val = unified_at(d, m, zz);
        lo = std::min(lo, val);
        hi = std::max(hi, val);
    }
    v.value_lo = lo;
    v.value_hi = hi;
    if (!v.is_interval() && zd_hi_provable(static_cast<int>(d)) <= m && m < 2 * d) {
        // Every admissible Z gives the same value and the window proof applies.
        v.status = Optimality::ProvenOptimal;
        v.case_tag = "Z(d)<=m<2d";
        return v;
    }
    v.status = Optimality::Unknown;
    v.case_tag = m < 2 * d ? "open: d<m<Z(d)" : "open: m>=2d";
    return v;
}

SurplusValue g_triangle(int d, int i, bool assume_conjectures) {
    if (d < 2 || d > kMaxParameter)
        throw std::invalid_argument("g requires 2 <= d <= " + std::to_string(kMaxParameter));
    ZdResolution z = resolve_Zd(d, assume_conjectures);
    int top = z.hi;
    if (i < d || i > top)
        throw std::domain_error("g(d, i) requires d <= i <= " + std::to_string(top) + ", got i = " +
                                std::to_string(i));
    SurplusValue s;
    if (i == d) {
        s.value = 1;  // A_d: d^2 + 1 edges on matching number d
        s.conjectured = false;
        return s;
    }
    if (i == top) {
        s.value = d / 2;
        s.conjectured = z.kind != ZdResolution::Kind::Exact;
        return s;
    }
    // Interior d < i < Z(d) (or i inside an unresolved bracket): interpolation.
    s.value = i - d + 1;
    s.conjectured = true;
    return s;
}

long long h_triangle(long long d, long long m) {
    check_params(d, m);
    if (!in_proven_domain(d, m))
        throw std::domain_error("h(d, m) is only defined on the proven domain");
    long long half = d / 2;
    long long ceil_half = (d + 1) / 2;

    if (d == 1) return 0;
    if (m < ceil_half) return 0;
    if (m < d) return half;  // ceil(d/2) <= m < d
    if (m == d) {
        if (d % 2 == 0) return d - 1;
        return half - 1;  // odd d >= 3
    }

    // m > d, closed rows per d.
    if (d == 2) return (m + 1) / 2;
    if (d == 3) return m / 2 - m / 3;
    if (d <= 6) {
        long long v = half * (m / ceil_half - m / (d + 1));
        if ((m + 1) % (d + 1) == 0) v -= 1;
        return v;
    }
    // d >= 7 inside the proven window Z(d) <= m < 2d.
    return half * (m / ceil_half - 1);
}

bool in_proven_domain(long long d, long long m) {
    check_params(d, m);
    if (d == 1 || m <= d || d <= 6) return true;
    int hi = zd_hi_provable(static_cast<int>(d));
    return hi <= m && m < 2 * d;
}

}  // namespace trifree::formulas
