#include "trifree/graph_io.hpp"

#include <cstdint>
#include <sstream>

#include <nlohmann/json.hpp>

namespace trifree {

Graph6Error::Graph6Error(std::size_t offset, const std::string& message)
    : std::runtime_error("graph6: byte " + std::to_string(offset) + ": " + message), byte_offset(offset) {}

namespace {

void append_sextets(std::string& out, std::uint64_t value, int count) {
    for (int i = count - 1; i >= 0; --i) out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + 63));
}

std::string encode_order(long long n) {
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        append_sextets(out, static_cast<std::uint64_t>(n), 3);
    } else {
        out.push_back(126);
        out.push_back(126);
        append_sextets(out, static_cast<std::uint64_t>(n), 6);
    }
    return out;
}

// Returns (n, header byte count). Validates printable range as it goes.
std::pair<long long, std::size_t> decode_order(std::string_view text) {
    auto sextet = [&](std::size_t pos) -> std::uint64_t {
        if (pos >= text.size()) throw Graph6Error(text.size(), "truncated size header");
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw Graph6Error(pos, "byte out of printable range 63..126");
        return c - 63;
    };
    std::uint64_t first = sextet(0);
    if (first != 63) return {static_cast<long long>(first), 1};
    std::uint64_t second = sextet(1);
    if (second != 63) {
        std::uint64_t n = second;
        for (std::size_t i = 2; i < 4; ++i) n = (n << 6) | sextet(i);
        return {static_cast<long long>(n), 4};
    }
    std::uint64_t n = 0;
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(i);
    return {static_cast<long long>(n), 8};
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out = encode_order(n);
    int bitpos = 0;
    unsigned current = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            current = (current << 1) | (g.has_edge(u, v) ? 1u : 0u);
            if (++bitpos == 6) {
                out.push_back(static_cast<char>(current + 63));
                bitpos = 0;
                current = 0;
            }
        }
    if (bitpos > 0) out.push_back(static_cast<char>((current << (6 - bitpos)) + 63));
    return out;
}

Graph graph6_decode(std::string_view text) {
    if (text.empty()) throw Graph6Error(0, "empty input");
    auto [n, header] = decode_order(text);
    if (n > kMaxMaterializedVertices)
        throw Graph6Error(0, "order " + std::to_string(n) + " exceeds materialization limit " +
                                 std::to_string(kMaxMaterializedVertices));
    const long long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() < header + body) throw Graph6Error(text.size(), "truncated edge bit stream");
    if (text.size() > header + body) throw Graph6Error(header + body, "unexpected trailing byte");
    Graph g(static_cast<int>(n));
    long long bit = 0;
    for (std::size_t i = 0; i < body; ++i) {
        unsigned char c = static_cast<unsigned char>(text[header + i]);
        if (c < 63 || c > 126) throw Graph6Error(header + i, "byte out of printable range 63..126");
        unsigned value = c - 63;
        for (int k = 5; k >= 0; --k, ++bit) {
            bool set = (value >> k) & 1;
            if (bit >= bits) {
                if (set) throw Graph6Error(header + i, "nonzero padding bits");
                continue;
            }
            if (set) {
                // Column-major upper triangle: recover (u, v) from the bit index.
                long long b = bit;
                int v = 1;
                while (b >= v) b -= v, ++v;
                g.add_edge(static_cast<int>(b), v);
            }
        }
    }
    return g;
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edge_list()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_json(const Graph& g) {
    std::ostringstream out;
    out << "{\"n\": " << g.order() << ", \"edges\": [";
    bool first = true;
    for (auto [u, v] : g.edge_list()) {
        if (!first) out << ", ";
        first = false;
        out << "[" << u << ", " << v << "]";
    }
    out << "]}";
    return out.str();
}

Graph from_json(std::string_view text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("graph json: ") + e.what());
    }
    if (!parsed.is_object() || !parsed.contains("n") || !parsed.contains("edges"))
        throw std::invalid_argument("graph json: expected object with \"n\" and \"edges\"");
    if (!parsed["n"].is_number_integer() || parsed["n"].get<long long>() < 0)
        throw std::invalid_argument("graph json: \"n\" must be a nonnegative integer");
    long long n = parsed["n"].get<long long>();
    if (n > kMaxMaterializedVertices)
        throw std::invalid_argument("graph json: order exceeds materialization limit");
    Graph g(static_cast<int>(n));
    if (!parsed["edges"].is_array()) throw std::invalid_argument("graph json: \"edges\" must be an array");
    for (const auto& e : parsed["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw std::invalid_argument("graph json: each edge must be a pair of integers");
        long long u = e[0].get<long long>();
        long long v = e[1].get<long long>();
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::invalid_argument("graph json: edge endpoint out of range");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

}  // namespace trifree
