#include "trifree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>
#include <utility>

#include "json.hpp"
#include "trifree/canonical.hpp"
#include "trifree/graph_io.hpp"
#include "trifree/knapsack.hpp"
#include "trifree/matching.hpp"

namespace trifree::oracle {

namespace {

using Rows = std::vector<std::uint64_t>;

struct EngineOptions {
    int n_max = 1;
    int max_degree = -1;  // -1 unbounded
    bool triangle_free = true;
    bool connected = false;
    DegreeProfile profile = DegreeProfile::All;
    bool no_isolated = false;  // emission filter with a feasibility prune
    int nu_cap = -1;
    bool emit_all_levels = false;
};

// Quick matching lower bound on raw rows; exceeding the cap proves nu does.
int greedy_matching_size(int n, const Rows& rows) {
    std::uint64_t used = 0;
    int cnt = 0;
    for (int v = 0; v < n; ++v) {
        if (used >> v & 1) continue;
        std::uint64_t free_nbrs = rows[static_cast<size_t>(v)] & ~used;
        if (!free_nbrs) continue;
        used |= (1ull << v) | (free_nbrs & -free_nbrs);
        ++cnt;
    }
    return cnt;
}

// Level-by-level augmentation: every isomorphism class on j vertices is the
// one-vertex deletion of some class on j+1, so extending certificate-deduped
// levels by all admissible new-vertex neighborhoods is exhaustive. All prunes
// are valid for every deletion order of every target graph.
struct Engine {
    EngineOptions opt;
    const std::function<bool(const Graph&)>& sink;
    bool stopped = false;

    bool capped() const { return opt.max_degree >= 0; }

    bool profile_ok(int n, const Rows& rows) const {
        if (opt.profile == DegreeProfile::All) return true;
        int d = opt.max_degree;
        int short_count = 0;
        for (int v = 0; v < n; ++v) {
            int deg = std::popcount(rows[static_cast<size_t>(v)]);
            if (deg == d) continue;
            if (opt.profile == DegreeProfile::AlmostRegular && deg == d - 1 &&
                ++short_count == 1)
                continue;
            return false;
        }
        return opt.profile == DegreeProfile::Regular || short_count == 1;
    }

    // True when no extension of this graph (under any of the remaining
    // levels) can satisfy the filter.
    bool dead_end(int n, const Rows& rows, long long edges) const {
        int future = opt.n_max - n;
        if (opt.profile != DegreeProfile::All) {
            int d = opt.max_degree;
            long long deficit_sum = 0;
            int over = 0, over_excess = 0;
            for (int v = 0; v < n; ++v) {
                int def = d - std::popcount(rows[static_cast<size_t>(v)]);
                deficit_sum += def;
                if (def > future) {
                    ++over;
                    over_excess = def - future;
                }
            }
            if (opt.profile == DegreeProfile::Regular) {
                if (over > 0) return true;
                if (deficit_sum > static_cast<long long>(future) * d) return true;
            } else {
                if (over >= 2 || over_excess > 1) return true;
                if (deficit_sum - 1 > static_cast<long long>(future) * d) return true;
            }
            long long target = (static_cast<long long>(opt.n_max) * d -
                                (opt.profile == DegreeProfile::AlmostRegular ? 1 : 0)) /
                               2;
            if (edges > target) return true;
            long long max_future = 0;
            for (int t = n; t < opt.n_max; ++t) max_future += std::min(d, t);
            if (edges + max_future < target) return true;
        }
        if (opt.nu_cap >= 0 && capped() &&
            edges > static_cast<long long>(opt.max_degree + 1) * opt.nu_cap)
            return true;
        if (opt.no_isolated && capped()) {
            int deg0 = 0;
            for (int v = 0; v < n; ++v)
                if (rows[static_cast<size_t>(v)] == 0) ++deg0;
            if (deg0 > static_cast<long long>(future) * opt.max_degree) return true;
        }
        if (opt.connected && capped() && !opt.emit_all_levels && n < opt.n_max) {
            // A component whose vertices are all at the cap can never join
            // the rest of the final graph.
            std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
            std::uint64_t visited = 0;
            for (int s = 0; s < n; ++s) {
                if (visited >> s & 1) continue;
                std::uint64_t comp = 1ull << s, frontier = comp;
                while (frontier) {
                    std::uint64_t grow = 0;
                    std::uint64_t f = frontier;
                    while (f) {
                        int v = std::countr_zero(f);
                        f &= f - 1;
                        grow |= rows[static_cast<size_t>(v)];
                    }
                    frontier = grow & all & ~comp;
                    comp |= frontier;
                }
                visited |= comp;
                bool all_capped = true;
                std::uint64_t c = comp;
                while (c) {
                    int v = std::countr_zero(c);
                    c &= c - 1;
                    if (std::popcount(rows[static_cast<size_t>(v)]) < opt.max_degree) {
                        all_capped = false;
                        break;
                    }
                }
                if (all_capped) return true;
            }
        }
        return false;
    }

    void emit(int n, const Rows& rows) {
        if (!opt.emit_all_levels && n != opt.n_max) return;
        if (!profile_ok(n, rows)) return;
        if (opt.no_isolated)
            for (int v = 0; v < n; ++v)
                if (rows[static_cast<size_t>(v)] == 0) return;
        Graph g = Graph::from_bit_rows(n, rows);
        if (opt.connected && !is_connected(g)) return;
        if (!sink(g)) stopped = true;
    }

    // Consider the level-(j+1) candidate formed by joining a new vertex to S.
    void consider(int j, const Rows& parent, long long parent_edges, std::uint64_t s_mask,
                  std::vector<Rows>& next, std::unordered_set<std::string>& seen) {
        Rows child = parent;
        child.push_back(s_mask);
        std::uint64_t s = s_mask;
        while (s) {
            int v = std::countr_zero(s);
            s &= s - 1;
            child[static_cast<size_t>(v)] |= 1ull << j;
        }
        long long edges = parent_edges + std::popcount(s_mask);
        if (dead_end(j + 1, child, edges)) return;
        if (opt.nu_cap >= 0 && greedy_matching_size(j + 1, child) > opt.nu_cap) return;
        if (!seen.insert(canonical_certificate(j + 1, child)).second) return;
        if (opt.nu_cap >= 0 &&
            matching_number(Graph::from_bit_rows(j + 1, child)) > opt.nu_cap)
            return;
        emit(j + 1, child);
        if (j + 1 < opt.n_max) next.push_back(std::move(child));
    }

    void extend(int j, const Rows& rows, std::vector<Rows>& next,
                std::unordered_set<std::string>& seen) {
        long long edges = 0;
        std::vector<int> allowed;
        for (int v = 0; v < j; ++v) {
            int deg = std::popcount(rows[static_cast<size_t>(v)]);
            edges += deg;
            if (!capped() || deg < opt.max_degree) allowed.push_back(v);
        }
        edges /= 2;
        int k_max = capped() ? std::min<int>(opt.max_degree, static_cast<int>(allowed.size()))
                             : static_cast<int>(allowed.size());

        // Recursive subset enumeration; triangle-free mode admits only
        // independent neighborhoods (a common neighbor would close a triangle).
        auto rec = [&](auto&& self, size_t idx, std::uint64_t s_mask, int count) -> void {
            if (stopped) return;
            consider(j, rows, edges, s_mask, next, seen);
            if (count == k_max) return;
            for (size_t i = idx; i < allowed.size(); ++i) {
                int v = allowed[i];
                if (opt.triangle_free && (rows[static_cast<size_t>(v)] & s_mask)) continue;
                self(self, i + 1, s_mask | (1ull << v), count + 1);
                if (stopped) return;
            }
        };
        rec(rec, 0, 0, 0);
    }

    void run() {
        std::vector<Rows> cur;
        cur.push_back(Rows{0});
        emit(1, cur.front());
        for (int j = 1; j < opt.n_max && !stopped; ++j) {
            std::vector<Rows> next;
            std::unordered_set<std::string> seen;
            for (const Rows& rows : cur) {
                extend(j, rows, next, seen);
                if (stopped) break;
            }
            cur = std::move(next);
        }
    }
};

void validate_filter(const EnumFilter& filter, const EnumBudget& budget) {
    if (filter.n < 1) throw std::invalid_argument("enumeration requires n >= 1");
    if (budget.max_vertices > 64)
        throw std::invalid_argument("enumeration budget cannot exceed 64 vertices");
    if (filter.n > budget.max_vertices)
        throw BudgetExceeded("n = " + std::to_string(filter.n) +
                             " exceeds the enumeration budget of " +
                             std::to_string(budget.max_vertices) + " vertices");
    if (filter.profile != DegreeProfile::All && filter.max_degree < 0)
        throw std::invalid_argument("degree profiles require max_degree to carry d");
    if (filter.profile == DegreeProfile::AlmostRegular &&
        (filter.n < 2 || filter.max_degree < 1))
        throw std::invalid_argument("AlmostRegular requires n >= 2 and d >= 1");
}

}  // namespace

void enumerate(const EnumFilter& filter, const std::function<bool(const Graph&)>& sink,
               EnumBudget budget) {
    validate_filter(filter, budget);
    EngineOptions opt;
    opt.n_max = filter.n;
    opt.max_degree = filter.max_degree;
    opt.triangle_free = filter.triangle_free;
    opt.connected = filter.connected;
    opt.profile = filter.profile;
    Engine engine{opt, sink};
    engine.run();
}

std::vector<Graph> enumerate_all(const EnumFilter& filter, EnumBudget budget) {
    std::vector<Graph> out;
    enumerate(
        filter,
        [&](const Graph& g) {
            out.push_back(g);
            return true;
        },
        budget);
    return out;
}

std::string to_json(const OracleRecord& rec) {
    nlohmann::json j;
    j["d"] = rec.d;
    j["m"] = rec.m;
    j["best_edges"] = rec.best_edges;
    j["graph6"] = graph6_encode(rec.witness);
    j["vertex_bound_used"] = rec.vertex_bound_used;
    j["exhaustive"] = rec.exhaustive;
    return j.dump();
}

OracleRecord brute_force_f(int d, int m, int vertex_cap, EnumBudget budget) {
    if (d < 1 || m < 1) throw std::invalid_argument("brute_force_f requires d, m >= 1");
    if (vertex_cap < 1) throw std::invalid_argument("vertex_cap must be positive");
    long long safe = 2LL * d * m;
    int bound = static_cast<int>(std::min<long long>(vertex_cap, safe));
    if (bound > budget.max_vertices)
        throw BudgetExceeded("brute_force_f needs " + std::to_string(bound) +
                             " vertices, budget is " + std::to_string(budget.max_vertices));

    EngineOptions opt;
    opt.n_max = bound;
    opt.max_degree = d;
    opt.triangle_free = true;
    opt.no_isolated = true;
    opt.nu_cap = m;
    opt.emit_all_levels = true;

    OracleRecord rec;
    rec.d = d;
    rec.m = m;
    rec.vertex_bound_used = bound;
    rec.exhaustive = vertex_cap >= safe;
    std::function<bool(const Graph&)> sink = [&](const Graph& g) {
        if (g.size() > rec.best_edges) {
            rec.best_edges = g.size();
            rec.witness = g;
        }
        return true;
    };
    Engine engine{opt, sink};
    engine.run();
    return rec;
}

OracleRecord brute_force_component_f(int d, int i, EnumBudget budget) {
    if (d < 1 || i < 1) throw std::invalid_argument("component oracle requires d, i >= 1");
    int n = 2 * i + 1;
    if (n > budget.max_vertices)
        throw BudgetExceeded("component search needs " + std::to_string(n) +
                             " vertices, budget is " + std::to_string(budget.max_vertices));

    EngineOptions opt;
    opt.n_max = n;
    opt.max_degree = d;
    opt.triangle_free = true;
    opt.connected = true;
    opt.nu_cap = i;

    OracleRecord rec;
    rec.d = d;
    rec.m = i;
    rec.vertex_bound_used = n;
    rec.exhaustive = true;
    std::function<bool(const Graph&)> sink = [&](const Graph& g) {
        if (matching_number(g) == i && g.size() > rec.best_edges) {
            rec.best_edges = g.size();
            rec.witness = g;
        }
        return true;
    };
    Engine engine{opt, sink};
    engine.run();
    return rec;
}

long long oracle_f_via_components(int d, int m, EnumBudget budget) {
    if (d < 2 || m < d)
        throw std::invalid_argument("component composition requires 2 <= d <= m");
    formulas::ZdResolution z = formulas::resolve_Zd(d, false);
    if (!z.resolved())
        throw std::domain_error("Z(" + std::to_string(d) + ") is not exactly known");
    int z_top = std::min(z.value(), m);  // components larger than m never fit

    std::map<int, long long> utilities;
    for (int i = d; i <= z_top; ++i)
        utilities[i] = brute_force_component_f(d, i, budget).best_edges -
                       static_cast<long long>(d) * i;
    knapsack::KnapsackSolution sol = knapsack::solve_model2(d, m, utilities);
    return static_cast<long long>(d) * m + sol.objective;
}

formulas::ZdResolution search_Zd(int d, int nu_max, EnumBudget budget) {
    if (d < 2) throw std::invalid_argument("Z(d) search requires d >= 2");
    if (nu_max < 1) throw std::invalid_argument("nu_max must be positive");
    if (2 * nu_max + 1 > budget.max_vertices)
        throw BudgetExceeded("Z(d) search needs " + std::to_string(2 * nu_max + 1) +
                             " vertices, budget is " + std::to_string(budget.max_vertices));

    for (int t = 1; t <= nu_max; ++t) {
        EnumFilter filter;
        filter.n = 2 * t + 1;
        filter.max_degree = d;
        filter.triangle_free = true;
        filter.connected = true;
        filter.profile = d % 2 == 0 ? DegreeProfile::Regular : DegreeProfile::AlmostRegular;
        bool found = false;
        enumerate(
            filter,
            [&](const Graph& g) {
                if (!is_factor_critical(g)) return true;
                found = true;
                return false;
            },
            budget);
        if (found) {
            formulas::ZdResolution z;
            z.d = d;
            z.kind = formulas::ZdResolution::Kind::Exact;
            z.lo = z.hi = t;
            z.provenance = "oracle (exhaustive enumeration, smaller nu refuted)";
            return z;
        }
    }

    formulas::ZdResolution theory = formulas::resolve_Zd(d, false);
    formulas::ZdResolution z;
    z.d = d;
    z.kind = formulas::ZdResolution::Kind::Interval;
    z.lo = std::max(nu_max + 1, theory.lo);
    z.hi = theory.hi;
    if (z.lo > z.hi)
        throw std::runtime_error("oracle refutation contradicts the closed-form bounds");
    z.provenance = "oracle (refuted nu <= " + std::to_string(nu_max) + ") + closed-form bounds";
    return z;
}

long long count_witnesses(int d, int nu, EnumBudget budget) {
    if (d < 2 || nu < 1) throw std::invalid_argument("witness count requires d >= 2, nu >= 1");
    if (2 * nu + 1 > budget.max_vertices)
        throw BudgetExceeded("witness count needs " + std::to_string(2 * nu + 1) +
                             " vertices, budget is " + std::to_string(budget.max_vertices));
    EnumFilter filter;
    filter.n = 2 * nu + 1;
    filter.max_degree = d;
    filter.triangle_free = true;
    filter.connected = true;
    filter.profile = d % 2 == 0 ? DegreeProfile::Regular : DegreeProfile::AlmostRegular;
    long long count = 0;
    enumerate(
        filter,
        [&](const Graph& g) {
            if (is_factor_critical(g)) ++count;
            return true;
        },
        budget);
    return count;
}

RestrictedScan restricted_Zd_scan(int d, int nu_lo, int nu_hi,
                                  constructions::SearchBudget budget) {
    if (d < 2 || nu_lo < 1 || nu_hi < nu_lo)
        throw std::invalid_argument("restricted scan requires d >= 2, 1 <= nu_lo <= nu_hi");
    RestrictedScan scan;
    scan.d = d;
    scan.nu_lo = nu_lo;
    scan.nu_hi = nu_hi;
    for (int nu = nu_lo; nu <= nu_hi; ++nu) {
        if (constructions::find_cd_witness(d, nu, budget)) {
            scan.smallest_found = nu;
            break;
        }
    }
    return scan;
}

}  // namespace trifree::oracle
