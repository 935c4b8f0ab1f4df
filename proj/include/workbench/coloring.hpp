#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "workbench/graph.hpp"

namespace wb {

/// A proper vertex coloring with 0-based color indices.
struct Coloring {
    std::vector<int> assignment;  // vertex id -> color
    int colors_used = 0;

    bool proper_for(const Graph& g) const;
};

/// Decision result for "is g k-colorable". NoComplete is only emitted after
/// a provably exhaustive search; Unknown means the node budget ran out.
struct ColorVerdict {
    enum class Status { Yes, NoComplete, Unknown };
    Status status = Status::Unknown;
    std::optional<Coloring> coloring;  // present iff Yes
    std::uint64_t nodes_explored = 0;
};

/// Greedy first-fit along the given vertex order. Deterministic.
Coloring greedy_coloring(const Graph& g, const std::vector<int>& order);

/// Exact decision via saturation-guided backtracking with color symmetry
/// breaking (a new color index may only be introduced in increasing order).
/// Budget counts decision nodes, so runs are reproducible. k = 0 is allowed
/// and answers trivially.
ColorVerdict k_colorable(const Graph& g, int k, std::uint64_t budget = 50'000'000);

/// Exact clique number with a witness clique.
struct CliqueResult {
    int size = 0;
    std::vector<int> witness;
};

/// Triangle-free graphs take the fast path (omega <= 2) at any size; general
/// graphs run branch and bound and are limited to max_n vertices.
CliqueResult clique_number(const Graph& g, int max_n = 10000);

/// Exact chi when the budget allows: a coloring with chi colors plus the
/// exhausted refusal at chi - 1. Otherwise a bracket [lower, upper].
struct ChromaticResult {
    bool exact = false;
    int lower = 0;
    int upper = 0;
    std::optional<Coloring> coloring;          // proper coloring with `upper` colors
    std::uint64_t refutation_nodes = 0;        // nodes of the NoComplete run at chi-1
    std::uint64_t nodes_explored = 0;          // total across all decision runs
    int chi() const { return upper; }          // meaningful when exact
};

ChromaticResult chromatic_number(const Graph& g, std::uint64_t budget = 50'000'000);

/// Full structural report used by the CLI.
struct AnalysisReport {
    int n = 0;
    int m = 0;
    ChromaticResult chromatic;
    CliqueResult clique;
    bool triangle_free = false;
    std::optional<WheelWitness> wheel;
};

AnalysisReport analyze_graph(const Graph& g, std::uint64_t budget = 50'000'000);

}  // namespace wb
