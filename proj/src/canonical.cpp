#include "trifree/canonical.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace trifree {

namespace {

using Cells = std::vector<std::vector<int>>;

// Individualization-refinement search for the minimal adjacency bit string.
// Refinement splits cells by neighbor counts against every cell, so the
// branch structure is invariant under relabeling; the minimum over all leaf
// labelings is therefore a canonical form.
struct CanonSearcher {
    int n;
    const std::uint64_t* rows;
    std::string best;  // packed body of the best leaf, bits MSB-first
    bool have_best = false;
    std::vector<int> best_order;                  // leaf labeling behind best
    std::vector<std::vector<int>> generators;     // discovered automorphisms

    // Equitable refinement: split the first cell whose members disagree on
    // some neighbor-count signature, sub-cells ordered by signature.
    void refine(Cells& cells) const {
        for (bool changed = true; changed;) {
            changed = false;
            std::vector<std::uint64_t> masks(cells.size(), 0);
            for (size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c]) masks[c] |= 1ull << v;
            for (size_t target = 0; target < cells.size(); ++target) {
                if (cells[target].size() <= 1) continue;
                std::vector<std::pair<std::vector<int>, int>> sig;
                sig.reserve(cells[target].size());
                for (int v : cells[target]) {
                    std::vector<int> s(cells.size());
                    for (size_t c = 0; c < cells.size(); ++c)
                        s[c] = std::popcount(rows[v] & masks[c]);
                    sig.emplace_back(std::move(s), v);
                }
                std::sort(sig.begin(), sig.end());
                if (sig.front().first == sig.back().first) continue;
                Cells groups;
                for (size_t i = 0; i < sig.size();) {
                    size_t k = i;
                    std::vector<int> group;
                    while (k < sig.size() && sig[k].first == sig[i].first)
                        group.push_back(sig[k++].second);
                    groups.push_back(std::move(group));
                    i = k;
                }
                cells.erase(cells.begin() + static_cast<long>(target));
                cells.insert(cells.begin() + static_cast<long>(target), groups.begin(),
                             groups.end());
                changed = true;
                break;
            }
        }
    }

    // Pack bits (u', v') for all u' < v' < upto, column-major, MSB-first.
    // inv[p] is the original vertex placed at position p.
    std::string pack(const std::vector<int>& inv, int upto) const {
        std::string out(static_cast<size_t>(upto * (upto - 1) / 2 + 7) / 8, '\0');
        int t = 0;
        for (int vp = 1; vp < upto; ++vp)
            for (int up = 0; up < vp; ++up, ++t)
                if (rows[inv[up]] >> inv[vp] & 1)
                    out[static_cast<size_t>(t >> 3)] |= static_cast<char>(0x80u >> (t & 7));
        return out;
    }

    // True when the bits determined by the singleton prefix already exceed
    // the best leaf, so no completion can win.
    bool prefix_beats_best(const std::vector<int>& inv) const {
        int bits = static_cast<int>(inv.size() * (inv.size() - 1) / 2);
        std::string prefix = pack(inv, static_cast<int>(inv.size()));
        int full = bits / 8;
        for (int i = 0; i < full; ++i) {
            auto p = static_cast<unsigned char>(prefix[static_cast<size_t>(i)]);
            auto b = static_cast<unsigned char>(best[static_cast<size_t>(i)]);
            if (p != b) return p > b;
        }
        int rem = bits % 8;
        if (rem == 0) return false;
        unsigned mask = 0xFFu << (8 - rem);
        unsigned p = static_cast<unsigned char>(prefix[static_cast<size_t>(full)]) & mask;
        unsigned b = static_cast<unsigned char>(best[static_cast<size_t>(full)]) & mask;
        return p > b;
    }

    void search(Cells cells) {
        refine(cells);
        std::vector<int> prefix;
        for (const auto& cell : cells) {
            if (cell.size() != 1) break;
            prefix.push_back(cell[0]);
        }
        if (prefix.size() == cells.size()) {
            std::string body = pack(prefix, n);
            if (!have_best || body < best) {
                best = std::move(body);
                best_order = prefix;
                have_best = true;
            } else if (body == best) {
                // Two labelings with identical packed bodies compose to an
                // automorphism; keep it for orbit pruning at branch nodes.
                std::vector<int> sigma(static_cast<size_t>(n));
                bool identity = true;
                for (int i = 0; i < n; ++i) {
                    sigma[static_cast<size_t>(best_order[static_cast<size_t>(i)])] =
                        prefix[static_cast<size_t>(i)];
                    identity = identity && best_order[static_cast<size_t>(i)] ==
                                               prefix[static_cast<size_t>(i)];
                }
                if (!identity && generators.size() < 256) generators.push_back(std::move(sigma));
            }
            return;
        }
        if (have_best && prefix.size() >= 2 && prefix_beats_best(prefix)) return;

        size_t at = prefix.size();
        const std::vector<int> branch = cells[at];
        std::vector<int> done;
        for (int v : branch) {
            if (orbit_seen(v, done, prefix)) continue;
            done.push_back(v);
            Cells child(cells.begin(), cells.begin() + static_cast<long>(at));
            child.push_back({v});
            std::vector<int> rest;
            for (int u : branch)
                if (u != v) rest.push_back(u);
            child.push_back(std::move(rest));
            child.insert(child.end(), cells.begin() + static_cast<long>(at) + 1, cells.end());
            search(std::move(child));
        }
    }

    // True when v lies in the orbit of an already-branched sibling under the
    // automorphisms that fix the committed prefix pointwise. Such a subtree
    // is the image of an explored one and repeats its leaves exactly.
    bool orbit_seen(int v, const std::vector<int>& done, const std::vector<int>& prefix) const {
        if (done.empty() || generators.empty()) return false;
        std::vector<int> parent(static_cast<size_t>(n));
        for (int x = 0; x < n; ++x) parent[static_cast<size_t>(x)] = x;
        auto find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) {
                parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
                x = parent[static_cast<size_t>(x)];
            }
            return x;
        };
        bool any = false;
        for (const auto& sigma : generators) {
            bool fixes = true;
            for (int p : prefix)
                if (sigma[static_cast<size_t>(p)] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            any = true;
            for (int x = 0; x < n; ++x) {
                int a = find(x), b = find(sigma[static_cast<size_t>(x)]);
                if (a != b) parent[static_cast<size_t>(a)] = b;
            }
        }
        if (!any) return false;
        int fv = find(v);
        for (int u : done)
            if (find(u) == fv) return true;
        return false;
    }
};

}  // namespace

std::string canonical_certificate(int n, const std::vector<std::uint64_t>& rows) {
    if (n < 0 || n > 64) throw std::invalid_argument("certificate requires 0 <= n <= 64");
    if (rows.size() < static_cast<size_t>(n)) throw std::invalid_argument("missing rows");
    std::string cert(1, static_cast<char>(n));
    if (n <= 1) return cert;
    CanonSearcher searcher{n, rows.data(), {}, false};
    std::vector<int> all(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<size_t>(v)] = v;
    searcher.search(Cells{std::move(all)});
    return cert + searcher.best;
}

std::string canonical_certificate(const Graph& g) {
    if (g.order() > 64) throw std::invalid_argument("certificate requires order <= 64");
    std::vector<std::uint64_t> rows(static_cast<size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) rows[static_cast<size_t>(v)] = g.row(v)[0];
    return canonical_certificate(g.order(), rows);
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_certificate(a) == canonical_certificate(b);
}

}  // namespace trifree
