#include "workbench/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace wb {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto [u, v] : pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::out_of_range("graph: vertex id out of range");
        if (u == v)
            throw std::invalid_argument("graph: loop edge rejected");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.m_ = 0;
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.m_ += static_cast<int>(nbrs.size());
    }
    g.m_ /= 2;
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), target);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool operator==(const Graph& g, const Graph& h) { return graphs_equal_by_id(g, h); }

bool graphs_equal_by_id(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.neighbors(v) != h.neighbors(v)) return false;
    return true;
}

std::optional<std::array<int, 3>> triangle_witness(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            const auto& a = g.neighbors(u);
            const auto& b = g.neighbors(v);
            auto it = a.begin();
            auto jt = b.begin();
            while (it != a.end() && jt != b.end()) {
                if (*it < *jt) ++it;
                else if (*jt < *it) ++jt;
                else {
                    if (*it > v) return std::array<int, 3>{u, v, *it};
                    ++it; ++jt;
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

// g - hub must be a single spanning cycle: every remaining vertex of degree 2
// and one closed walk covering them all.
std::optional<std::vector<int>> spanning_cycle_without(const Graph& g, int hub) {
    int n = g.vertex_count();
    if (n - 1 < 3) return std::nullopt;
    std::vector<std::vector<int>> rest(n);
    for (int v = 0; v < n; ++v) {
        if (v == hub) continue;
        for (int w : g.neighbors(v)) {
            if (w == hub) continue;
            rest[v].push_back(w);
        }
        if (rest[v].size() != 2) return std::nullopt;
    }
    int start = hub == 0 ? 1 : 0;
    std::vector<int> cycle{start};
    int prev = -1, cur = start;
    for (int steps = 0; steps < n - 1; ++steps) {
        int next = rest[cur][0] == prev ? rest[cur][1] : rest[cur][0];
        if (next == start) {
            if (static_cast<int>(cycle.size()) == n - 1) return cycle;
            return std::nullopt;  // short cycle: g - hub is disconnected
        }
        cycle.push_back(next);
        prev = cur;
        cur = next;
    }
    return std::nullopt;
}

}  // namespace

std::optional<WheelWitness> wheel_witness(const Graph& g) {
    for (int hub = 0; hub < g.vertex_count(); ++hub) {
        if (g.degree(hub) < 3) continue;
        if (auto cycle = spanning_cycle_without(g, hub))
            return WheelWitness{hub, std::move(*cycle)};
    }
    return std::nullopt;
}

}  // namespace wb
