#include "trifree/constructions.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "trifree/formulas.hpp"
#include "trifree/graph_io.hpp"
#include "trifree/matching.hpp"

namespace trifree::constructions {

namespace {

// Part i occupies vertices [offset_i, offset_i + sizes_i).
std::array<int, 5> part_offsets(const std::array<int, 5>& sizes) {
    std::array<int, 5> off{};
    for (int i = 1; i < 5; ++i) off[i] = off[i - 1] + sizes[i - 1];
    return off;
}

// Exactly d-regular, or exactly one vertex of degree d-1 and the rest d.
bool profile_matches(const Graph& g, int d, bool almost) {
    int short_count = 0;
    for (int v = 0; v < g.order(); ++v) {
        int deg = g.degree(v);
        if (deg == d) continue;
        if (almost && deg == d - 1 && ++short_count == 1) continue;
        return false;
    }
    return almost ? short_count == 1 : true;
}

bool certify_cd(const Graph& g, int d, int nu_target) {
    if (g.order() != 2 * nu_target + 1) return false;
    if (!profile_matches(g, d, d % 2 == 1)) return false;
    if (!is_triangle_free(g)) return false;
    return is_factor_critical(g);  // implies nu = (order - 1) / 2
}

// Enumerate blow-up candidates whose degree arithmetic hits the target
// profile, realize them in deterministic order, return the first that
// certifies. Deficit mode pins part 0 to a single vertex of degree d-1.
std::optional<Graph> scan_blowup_candidates(int d, int nu_target, SearchBudget budget) {
    const bool deficit = d % 2 == 1;
    const int N = 2 * nu_target + 1;
    const int t0 = deficit ? d - 1 : d;
    long long realized = 0;

    std::array<int, 5> r{};
    for (r[0] = 0; r[0] <= 2; ++r[0])
    for (r[1] = 0; r[1] <= 2; ++r[1])
    for (r[2] = 0; r[2] <= 2; ++r[2])
    for (r[3] = 0; r[3] <= 2; ++r[3])
    for (r[4] = 0; r[4] <= 2; ++r[4]) {
        for (int n0 = deficit ? 1 : 1; n0 <= (deficit ? 1 : N); ++n0) {
            for (int n1 = 1; n1 <= N; ++n1) {
                // Degree equations around the cycle determine n2, n3, n4.
                int n2 = d - n0 + r[0] + r[1];
                int n3 = d - n1 + r[1] + r[2];
                int n4 = d - n2 + r[2] + r[3];
                if (n2 < 1 || n3 < 1 || n4 < 1) continue;
                if (n3 + n0 - r[3] - r[4] != d) continue;
                if (n4 + n1 - r[4] - r[0] != t0) continue;
                if (n0 + n1 + n2 + n3 + n4 != N) continue;
                BlowUpSpec spec{{n0, n1, n2, n3, n4}, r};
                bool legal = true;
                for (int i = 0; i < 5 && legal; ++i)
                    if (r[i] > 0 && (spec.sizes[i] != spec.sizes[(i + 1) % 5] || r[i] > spec.sizes[i]))
                        legal = false;
                if (!legal) continue;
                if (++realized > budget.max_candidates) return std::nullopt;
                Graph g = realize_blowup(spec);
                if (certify_cd(g, d, nu_target)) return g;
            }
        }
    }
    return std::nullopt;
}

// Almost d-regular graph from the (d+1)-regular base: delete a near-perfect
// matching avoiding vertex a, then one edge at a. Every degree drops by one
// except the second endpoint of that edge, which drops by two.
std::optional<Graph> derive_odd_from_even(const Graph& base, int d) {
    int n = base.order();
    for (int a = 0; a < n; ++a) {
        Graph reduced = remove_vertex(base, a);
        Matching match = maximum_matching(reduced);
        if (2 * match.size() != n - 1) continue;
        Graph stripped = base;
        for (auto [x, y] : match.edges) {
            int u = x < a ? x : x + 1;
            int v = y < a ? y : y + 1;
            stripped.remove_edge(u, v);
        }
        for (int w : stripped.neighbors(a)) {
            Graph g = stripped;
            g.remove_edge(a, w);
            if (certify_cd(g, d, (n - 1) / 2)) return g;
        }
    }
    return std::nullopt;
}

const Graph& cached_Bd(int d) {
    static std::mutex mu;
    static std::map<int, Graph> cache;
    std::scoped_lock lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;

    std::optional<Graph> found;
    if (d % 2 == 0) {
        found = scan_blowup_candidates(d, nu_Bd(d), SearchBudget{});
    } else {
        std::optional<Graph> base;
        {
            int even = d + 1;
            if (auto it = cache.find(even); it != cache.end())
                base = it->second;
            else if ((base = scan_blowup_candidates(even, nu_Bd(even), SearchBudget{})))
                cache.emplace(even, *base);
        }
        if (base) found = derive_odd_from_even(*base, d);
    }
    if (!found)
        throw std::runtime_error("B_" + std::to_string(d) +
                                 " search failed; construction invariant broken");
    long long nu = nu_Bd(d);
    if (found->order() != 2 * nu + 1 || found->size() != d * nu + d / 2)
        throw std::runtime_error("B_" + std::to_string(d) + " certification mismatch");
    return cache.emplace(d, std::move(*found)).first->second;
}

}  // namespace

Graph realize_blowup(const BlowUpSpec& spec) {
    long long total = 0;
    for (int i = 0; i < 5; ++i) {
        if (spec.sizes[i] < 1) throw std::invalid_argument("blow-up part sizes must be positive");
        if (spec.removals[i] < 0) throw std::invalid_argument("removals must be nonnegative");
        total += spec.sizes[i];
    }
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        if (spec.removals[i] == 0) continue;
        if (spec.sizes[i] != spec.sizes[j])
            throw std::invalid_argument("regular removal requires equal part sizes");
        if (spec.removals[i] > spec.sizes[i])
            throw std::invalid_argument("removal regularity exceeds part size");
    }
    if (total > kMaxMaterializedVertices)
        throw std::invalid_argument("blow-up exceeds the materialization cap");

    Graph g(static_cast<int>(total));
    auto off = part_offsets(spec.sizes);
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        int s = spec.sizes[i], r = spec.removals[i];
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < spec.sizes[j]; ++b) {
                // Rotation pattern: removed pairs are (a, a+t mod s), t < r.
                if (r > 0 && ((b - a) % s + s) % s < r) continue;
                g.add_edge(off[i] + a, off[j] + b);
            }
    }
    return g;
}

std::string to_string(WitnessStatus s) {
    switch (s) {
        case WitnessStatus::ProvenOptimal: return "proven-optimal";
        case WitnessStatus::ConjecturedOptimal: return "conjectured-optimal";
        case WitnessStatus::LowerBound: return "lower-bound";
    }
    return "lower-bound";
}

std::string to_json(const WitnessReport& report) {
    nlohmann::json j;
    j["d"] = report.d;
    j["m"] = report.m;
    j["edges"] = report.claimed_edges;
    j["status"] = to_string(report.status);
    j["case"] = report.case_tag;
    j["graph6"] = graph6_encode(report.graph);
    return j.dump();
}

Graph star(int d) {
    if (d < 1) throw std::invalid_argument("star requires d >= 1");
    Graph g(d + 1);
    for (int leaf = 1; leaf <= d; ++leaf) g.add_edge(0, leaf);
    return g;
}

Graph construct_Ad(int d) {
    if (d < 2) throw std::invalid_argument("A_d requires d >= 2");
    BlowUpSpec spec{{1, 1, d / 2, d - 1, (d + 1) / 2}, {}};
    Graph g = realize_blowup(spec);
    if (g.size() != static_cast<long long>(d) * d + 1)
        throw std::runtime_error("A_d edge count mismatch");
    return g;
}

int nu_Bd(int d) {
    if (d < 2) throw std::invalid_argument("B_d requires d >= 2");
    return d % 2 == 0 ? (5 * d) / 4 : (5 * (d + 1)) / 4;
}

Graph construct_Bd(int d) {
    if (d < 2) throw std::invalid_argument("B_d requires d >= 2");
    return cached_Bd(d);
}

std::optional<Graph> find_cd_witness(int d, int nu_target, SearchBudget budget) {
    if (d < 2) throw std::invalid_argument("C_d search requires d >= 2");
    if (nu_target < 1) throw std::invalid_argument("nu_target must be positive");
    if (2 * nu_target + 1 > kMaxMaterializedVertices)
        throw std::invalid_argument("nu_target exceeds the materialization cap");
    if (auto g = scan_blowup_candidates(d, nu_target, budget)) return g;
    // The almost-regular family for odd d lives outside the blow-up space.
    if (d % 2 == 1 && nu_target == nu_Bd(d)) return construct_Bd(d);
    return std::nullopt;
}

Graph construct_general_component(int d) {
    if (d < 1) throw std::invalid_argument("component requires d >= 1");
    if (d == 1) return Graph::complete(2);
    if (d % 2 == 0) return Graph::complete(d + 1);
    // Odd d: K_{d+1} minus a perfect matching, plus a vertex joined to d others.
    Graph g(d + 2);
    for (int u = 0; u < d + 1; ++u)
        for (int v = u + 1; v < d + 1; ++v)
            if (!(u % 2 == 0 && v == u + 1)) g.add_edge(u, v);
    for (int u = 0; u < d; ++u) g.add_edge(d + 1, u);
    return g;
}

WitnessReport assemble_triangle_free_witness(long long d, long long m, bool assume_conjectures) {
    formulas::ExtremalValue fv = formulas::f_triangle(d, m, assume_conjectures);

    WitnessReport report;
    report.d = d;
    report.m = m;
    report.case_tag = fv.case_tag;

    if (d == 1) {
        if (2 * m > kMaxMaterializedVertices)
            throw std::invalid_argument("witness exceeds the materialization cap");
        Graph g(static_cast<int>(2 * m));
        for (long long i = 0; i < m; ++i)
            g.add_edge(static_cast<int>(2 * i), static_cast<int>(2 * i + 1));
        report.graph = g;
        report.claimed_edges = g.size();
        report.status = WitnessStatus::ProvenOptimal;
        return report;
    }

    formulas::ZdResolution zres = formulas::resolve_Zd(static_cast<int>(d), assume_conjectures);
    long long z = zres.resolved() ? zres.value() : zres.hi;  // hi = nu(B_d)
    long long k = m / z;
    long long r = m % z;

    long long verts = k * (2 * z + 1) + (r == d ? 2 * d + 1 : r * (d + 1));
    if (verts > kMaxMaterializedVertices)
        throw std::invalid_argument("witness exceeds the materialization cap");

    std::vector<Graph> parts;
    if (k > 0) {
        Graph cd = [&] {
            if (z == nu_Bd(static_cast<int>(d))) return construct_Bd(static_cast<int>(d));
            auto g = find_cd_witness(static_cast<int>(d), static_cast<int>(z));
            if (!g) throw std::runtime_error("C_d witness search failed");
            return *g;
        }();
        for (long long i = 0; i < k; ++i) parts.push_back(cd);
    }
    if (r == d) {
        parts.push_back(construct_Ad(static_cast<int>(d)));
    } else {
        for (long long i = 0; i < r; ++i) parts.push_back(star(static_cast<int>(d)));
    }

    report.graph = disjoint_union(parts);
    report.claimed_edges = report.graph.size();

    if (formulas::in_proven_domain(d, m)) {
        report.status = WitnessStatus::ProvenOptimal;
    } else if (assume_conjectures && r <= d) {
        report.status = WitnessStatus::ConjecturedOptimal;
    } else {
        report.status = WitnessStatus::LowerBound;
    }
    if (report.status != WitnessStatus::LowerBound &&
        report.claimed_edges != (fv.is_interval() ? -1 : fv.value()))
        throw std::runtime_error("witness edge count disagrees with the closed form");
    return report;
}

WitnessReport assemble_general_witness(long long d, long long m) {
    formulas::ExtremalValue fv = formulas::f_gen(d, m);
    long long ceil_half = (d + 1) / 2;
    long long q = m / ceil_half;
    long long r = m % ceil_half;

    long long comp_verts = d == 1 ? 2 : (d % 2 == 0 ? d + 1 : d + 2);
    if (q * comp_verts + r * (d + 1) > kMaxMaterializedVertices)
        throw std::invalid_argument("witness exceeds the materialization cap");

    std::vector<Graph> parts;
    if (q > 0) {
        Graph comp = construct_general_component(static_cast<int>(d));
        for (long long i = 0; i < q; ++i) parts.push_back(comp);
    }
    for (long long i = 0; i < r; ++i) parts.push_back(star(static_cast<int>(d)));

    WitnessReport report;
    report.d = d;
    report.m = m;
    report.case_tag = "general";
    report.status = WitnessStatus::ProvenOptimal;
    report.graph = disjoint_union(parts);
    report.claimed_edges = report.graph.size();
    if (report.claimed_edges != fv.value())
        throw std::runtime_error("witness edge count disagrees with the closed form");
    return report;
}

}  // namespace trifree::constructions
