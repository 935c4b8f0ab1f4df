#include "workbench/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wb {

bool Coloring::proper_for(const Graph& g) const {
    if (static_cast<int>(assignment.size()) != g.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (assignment[v] < 0) return false;
        for (int w : g.neighbors(v))
            if (assignment[v] == assignment[w]) return false;
    }
    std::vector<int> seen;
    for (int c : assignment) seen.push_back(c);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return static_cast<int>(seen.size()) == colors_used;
}

Coloring greedy_coloring(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    std::vector<bool> present(n, false);
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("greedy: order is not a permutation");
    for (int v : order) {
        if (v < 0 || v >= n || present[v])
            throw std::invalid_argument("greedy: order is not a permutation");
        present[v] = true;
    }
    Coloring c;
    c.assignment.assign(n, -1);
    std::vector<int> used;
    for (int v : order) {
        used.assign(g.degree(v) + 1, 0);
        for (int w : g.neighbors(v)) {
            int cw = c.assignment[w];
            if (cw >= 0 && cw < static_cast<int>(used.size())) used[cw] = 1;
        }
        int col = 0;
        while (used[col]) ++col;
        c.assignment[v] = col;
        c.colors_used = std::max(c.colors_used, col + 1);
    }
    return c;
}

namespace {

// Saturation-guided exact k-coloring search. Single-threaded so that the
// verdict and nodes_explored are identical run to run.
class KColorSearch {
public:
    KColorSearch(const Graph& g, int k, std::uint64_t budget)
        : g_(g), k_(k), budget_(budget), n_(g.vertex_count()) {
        color_.assign(n_, -1);
        satur_.assign(static_cast<std::size_t>(n_) * k_, 0);
        satur_count_.assign(n_, 0);
    }

    ColorVerdict run() {
        ColorVerdict verdict;
        if (n_ == 0) {
            verdict.status = ColorVerdict::Status::Yes;
            verdict.coloring = Coloring{{}, 0};
            return verdict;
        }
        if (k_ <= 0) {
            verdict.status = ColorVerdict::Status::NoComplete;
            return verdict;
        }
        bool exhausted = true;
        bool found = dfs(0, 0, exhausted);
        verdict.nodes_explored = nodes_;
        if (found) {
            verdict.status = ColorVerdict::Status::Yes;
            Coloring c;
            c.assignment = color_;
            c.colors_used = 1 + *std::max_element(color_.begin(), color_.end());
            verdict.coloring = std::move(c);
        } else {
            verdict.status = exhausted ? ColorVerdict::Status::NoComplete
                                       : ColorVerdict::Status::Unknown;
        }
        return verdict;
    }

private:
    bool dfs(int colored, int max_used, bool& exhausted) {
        if (colored == n_) return true;
        int v = pick_vertex();
        // Symmetry breaking: at most one brand-new color index is tried.
        int limit = std::min(max_used, k_ - 1);
        for (int c = 0; c <= limit; ++c) {
            if (satur_[static_cast<std::size_t>(v) * k_ + c]) continue;
            if (nodes_ >= budget_) { exhausted = false; return false; }
            ++nodes_;
            assign(v, c);
            if (dfs(colored + 1, std::max(max_used, c + 1), exhausted)) return true;
            unassign(v, c);
            if (!exhausted) return false;
        }
        return false;
    }

    int pick_vertex() const {
        int best = -1;
        int best_sat = -1, best_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (color_[v] >= 0) continue;
            int sat = satur_count_[v];
            int deg = static_cast<int>(g_.neighbors(v).size());
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    void assign(int v, int c) {
        color_[v] = c;
        for (int w : g_.neighbors(v)) {
            auto& cell = satur_[static_cast<std::size_t>(w) * k_ + c];
            if (cell++ == 0) ++satur_count_[w];
        }
    }

    void unassign(int v, int c) {
        color_[v] = -1;
        for (int w : g_.neighbors(v)) {
            auto& cell = satur_[static_cast<std::size_t>(w) * k_ + c];
            if (--cell == 0) --satur_count_[w];
        }
    }

    const Graph& g_;
    int k_;
    std::uint64_t budget_;
    int n_;
    std::uint64_t nodes_ = 0;
    std::vector<int> color_;
    std::vector<int> satur_;        // per (vertex, color): colored neighbors of that color
    std::vector<int> satur_count_;  // per vertex: distinct neighbor colors
};

}  // namespace

ColorVerdict k_colorable(const Graph& g, int k, std::uint64_t budget) {
    if (k < 0) throw std::invalid_argument("k_colorable: negative k");
    return KColorSearch(g, k, budget).run();
}

namespace {

// Plain max-clique branch and bound with a greedy coloring bound.
class MaxClique {
public:
    explicit MaxClique(const Graph& g) : g_(g) {}

    CliqueResult run() {
        std::vector<int> cand(g_.vertex_count());
        std::iota(cand.begin(), cand.end(), 0);
        std::vector<int> cur;
        expand(cand, cur);
        return best_;
    }

private:
    void expand(std::vector<int>& cand, std::vector<int>& cur) {
        if (cand.empty()) {
            if (static_cast<int>(cur.size()) > best_.size) {
                best_.size = static_cast<int>(cur.size());
                best_.witness = cur;
            }
            return;
        }
        // greedy color bound on the candidate set
        std::vector<int> colors(cand.size(), 0);
        int num_colors = 0;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            int c = 1;
            for (;; ++c) {
                bool ok = true;
                for (std::size_t j = 0; j < i; ++j)
                    if (colors[j] == c && g_.has_edge(cand[i], cand[j])) { ok = false; break; }
                if (ok) break;
            }
            colors[i] = c;
            num_colors = std::max(num_colors, c);
        }
        if (static_cast<int>(cur.size()) + num_colors <= best_.size) return;
        for (int i = static_cast<int>(cand.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(cur.size()) + colors[i] <= best_.size) continue;
            int v = cand[i];
            cur.push_back(v);
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (g_.has_edge(v, cand[j])) next.push_back(cand[j]);
            expand(next, cur);
            cur.pop_back();
        }
    }

    const Graph& g_;
    CliqueResult best_;
};

}  // namespace

CliqueResult clique_number(const Graph& g, int max_n) {
    if (g.vertex_count() == 0) return {};
    if (g.edge_count() == 0) return {1, {0}};
    auto tri = triangle_witness(g);
    if (!tri) {
        auto es = g.edges();
        return {2, {es.front().first, es.front().second}};
    }
    if (g.vertex_count() > max_n)
        throw std::invalid_argument("clique_number: graph exceeds size limit and is not triangle-free");
    return MaxClique(g).run();
}

ChromaticResult chromatic_number(const Graph& g, std::uint64_t budget) {
    ChromaticResult res;
    const int n = g.vertex_count();
    if (n == 0) {
        res.exact = true;
        res.coloring = Coloring{{}, 0};
        return res;
    }
    CliqueResult clique = clique_number(g);
    res.lower = std::max(1, clique.size);

    // Upper bound seed: best greedy over two deterministic orders.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    Coloring best = greedy_coloring(g, order);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    Coloring by_degree = greedy_coloring(g, order);
    if (by_degree.colors_used < best.colors_used) best = by_degree;
    res.upper = best.colors_used;
    res.coloring = best;

    // Ascend from omega - 1 so that a NoComplete certificate at chi - 1 is
    // always in hand when the first Yes (or the greedy upper bound) fixes chi.
    bool have_refutation = false;
    for (int k = res.lower - 1; k < res.upper; ++k) {
        ColorVerdict v = k_colorable(g, k, budget);
        res.nodes_explored += v.nodes_explored;
        if (v.status == ColorVerdict::Status::Yes) {
            res.upper = v.coloring->colors_used;
            res.coloring = std::move(*v.coloring);
            res.exact = have_refutation && res.lower == res.upper;
            return res;
        }
        if (v.status == ColorVerdict::Status::Unknown) {
            res.exact = false;
            return res;
        }
        res.refutation_nodes = v.nodes_explored;
        have_refutation = true;
        res.lower = k + 1;
    }
    res.exact = have_refutation || res.upper == 0;
    return res;
}

AnalysisReport analyze_graph(const Graph& g, std::uint64_t budget) {
    AnalysisReport rep;
    rep.n = g.vertex_count();
    rep.m = g.edge_count();
    rep.triangle_free = !triangle_witness(g).has_value();
    rep.clique = clique_number(g);
    rep.chromatic = chromatic_number(g, budget);
    rep.wheel = wheel_witness(g);
    return rep;
}

}  // namespace wb
