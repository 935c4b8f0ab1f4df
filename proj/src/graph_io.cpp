#include "workbench/graph_io.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace wb {

namespace {

void append_sextets(std::string& out, std::uint64_t value, int count) {
    for (int i = count - 1; i >= 0; --i)
        out.push_back(static_cast<char>(((value >> (6 * i)) & 0x3f) + 63));
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const std::uint64_t n = static_cast<std::uint64_t>(g.vertex_count());
    if (n > 68719476735ULL) throw std::invalid_argument("graph6: graph too large");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        append_sextets(out, n, 3);
    } else {
        out.push_back(126);
        out.push_back(126);
        append_sextets(out, n, 6);
    }
    int bit = 0;
    unsigned char acc = 0;
    for (int v = 1; v < g.vertex_count(); ++v) {
        for (int u = 0; u < v; ++u) {
            acc = static_cast<unsigned char>((acc << 1) | (g.has_edge(u, v) ? 1 : 0));
            if (++bit == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bit = 0;
                acc = 0;
            }
        }
    }
    if (bit > 0)
        out.push_back(static_cast<char>((acc << (6 - bit)) + 63));
    return out;
}

Graph from_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    std::size_t pos = 0;
    auto sextet = [&](const char* what) -> std::uint64_t {
        if (pos >= s.size()) throw std::invalid_argument(std::string("graph6: truncated ") + what);
        unsigned char c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c - 63;
    };
    std::uint64_t n = 0;
    std::uint64_t first = sextet("header");
    if (first <= 62) {
        n = first;
    } else if (first == 63) {
        if (pos < s.size() && s[pos] == 126) {
            ++pos;
            for (int i = 0; i < 6; ++i) n = (n << 6) | sextet("header");
        } else {
            for (int i = 0; i < 3; ++i) n = (n << 6) | sextet("header");
        }
    } else {
        throw std::invalid_argument("graph6: bad header byte");
    }
    if (n > 1000000ULL) throw std::invalid_argument("graph6: vertex count beyond supported size");
    std::vector<std::pair<int, int>> pairs;
    int bit = 0;
    std::uint64_t acc = 0;
    for (int v = 1; v < static_cast<int>(n); ++v) {
        for (int u = 0; u < v; ++u) {
            if (bit == 0) {
                acc = sextet("bit data");
                bit = 6;
            }
            --bit;
            if ((acc >> bit) & 1) pairs.emplace_back(u, v);
        }
    }
    if (pos != s.size()) throw std::invalid_argument("graph6: trailing bytes");
    return Graph::from_edges(static_cast<int>(n), pairs);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

Graph from_edge_list(const std::string& text) {
    std::istringstream is(text);
    long long n = -1, m = -1;
    if (!(is >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("edge list: bad header");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(is >> u >> v)) throw std::invalid_argument("edge list: truncated");
        pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edges(static_cast<int>(n), pairs);
}

std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph G {\n  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << "  " << v;
        auto it = g.labels().find(v);
        if (it != g.labels().end()) os << " [label=\"" << it->second << "\"]";
        os << ";\n";
    }
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

Graph parse_graph_auto(const std::string& text) {
    for (char c : text) {
        if (c == ' ') return from_edge_list(text);
        if (c == '\n') break;
    }
    return from_graph6(text);
}

}  // namespace wb
