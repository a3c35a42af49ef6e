#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "trifree/graph.hpp"

namespace trifree {

struct Graph6Error : std::runtime_error {
    Graph6Error(std::size_t offset, const std::string& message);
    std::size_t byte_offset;
};

// Standard graph6: size header (1, 4 or 8 bytes for n < 2^36), then the
// column-major upper triangle packed 6 bits per printable byte (+63).
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

// DOT output, one edge per line, undirected.
std::string to_dot(const Graph& g);

// {"n": int, "edges": [[u,v], ...]} with u < v, sorted lexicographically.
std::string to_json(const Graph& g);
Graph from_json(std::string_view text);

}  // namespace trifree
