#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wb {

/// Simple undirected graph on dense vertex ids 0..n-1. Immutable after
/// construction; adjacency lists are sorted and loop/duplicate free.
class Graph {
public:
    Graph() = default;

    /// Deduplicates pairs. Throws on ids out of range and on loops.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    /// Edges as sorted (u < v) pairs in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    const std::map<int, std::string>& labels() const { return labels_; }
    void set_label(int v, std::string name) { labels_[v] = std::move(name); }

    friend bool operator==(const Graph& g, const Graph& h);

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::map<int, std::string> labels_;
};

/// Same vertex count and identical edge sets under the shared ids.
/// No isomorphism is attempted anywhere in the project.
bool graphs_equal_by_id(const Graph& g, const Graph& h);

/// Some triangle (u < v < w) if one exists; exhaustive scan.
std::optional<std::array<int, 3>> triangle_witness(const Graph& g);

/// A wheel decomposition of the whole graph: hub plus the spanning cycle of
/// g - hub, in cyclic order.
struct WheelWitness {
    int hub;
    std::vector<int> cycle;
};

/// Present iff there is a vertex v with deg(v) >= 3 such that g - v is a
/// single cycle through all remaining vertices (length >= 3, so K4 = W3 is
/// reported). Lowest qualifying hub id wins.
std::optional<WheelWitness> wheel_witness(const Graph& g);

}  // namespace wb
