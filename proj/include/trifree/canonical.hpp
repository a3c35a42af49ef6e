#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trifree/graph.hpp"

namespace trifree {

// Isomorphism certificate: byte order(), then the lexicographically minimal
// packed upper triangle over refinement-consistent labelings. Two graphs have
// equal certificates iff they are isomorphic. Requires order <= 64.
std::string canonical_certificate(const Graph& g);

// Same certificate from raw single-word adjacency rows (rows[v] bit u set iff
// u ~ v), avoiding Graph construction in enumeration inner loops.
std::string canonical_certificate(int n, const std::vector<std::uint64_t>& rows);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace trifree
