#pragma once

#include <array>
#include <optional>
#include <string>

#include "trifree/graph.hpp"

namespace trifree::constructions {

// Blow-up of C_5: part i is an independent set of sizes[i] vertices, complete
// bipartite between cyclically adjacent parts, minus an r-regular bipartite
// graph between parts i and i+1 (removals[i] = r). A removal with r > 0
// requires the two parts to have equal size.
struct BlowUpSpec {
    std::array<int, 5> sizes{};
    std::array<int, 5> removals{};
};

Graph realize_blowup(const BlowUpSpec& spec);

enum class WitnessStatus { ProvenOptimal, ConjecturedOptimal, LowerBound };

std::string to_string(WitnessStatus s);

struct WitnessReport {
    Graph graph;
    long long claimed_edges = 0;
    WitnessStatus status = WitnessStatus::LowerBound;
    std::string case_tag;
    long long d = 0;
    long long m = 0;
};

// {"d":, "m":, "edges":, "status":, "case":, "graph6":}
std::string to_json(const WitnessReport& report);

struct SearchBudget {
    long long max_candidates = 200000;  // realized candidate graphs
};

// K_{1,d}: center vertex 0, leaves 1..d.
Graph star(int d);

// Blow-up with bag sizes (1, 1, floor(d/2), d-1, ceil(d/2)): triangle-free,
// factor-critical, 2d+1 vertices, max degree d, matching number d, d^2+1 edges.
Graph construct_Ad(int d);

// Triangle-free factor-critical graph, d-regular (d even) or almost d-regular
// (d odd), with matching number floor(5d/4) (even) / floor(5(d+1)/4) (odd),
// 2 nu + 1 vertices and d nu + floor(d/2) edges. Cached per d.
Graph construct_Bd(int d);

// Matching number of construct_Bd(d) by formula.
int nu_Bd(int d);

// Bounded search for a triangle-free factor-critical (almost) d-regular graph
// with the given matching number. nullopt means the candidate space was
// exhausted, not that no such graph exists.
std::optional<Graph> find_cd_witness(int d, int nu_target, SearchBudget budget = {});

// K_{d+1} when d+1 is odd; otherwise K_{d+1} minus a perfect matching plus one
// vertex joined to d of the others. Max degree <= d, matching number ceil(d/2).
// d = 1 degenerates to K_2.
Graph construct_general_component(int d);

// Extremal triangle-free witness for (d, m): m = k*Z + r against the best
// available Z, k copies of the C_d witness, then A_d (r = d) or r stars.
WitnessReport assemble_triangle_free_witness(long long d, long long m,
                                             bool assume_conjectures = false);

// Witness meeting the unrestricted bound: q = floor(m / ceil(d/2)) copies of
// the general component plus m - q*ceil(d/2) stars.
WitnessReport assemble_general_witness(long long d, long long m);

}  // namespace trifree::constructions
