#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "workbench/geometry.hpp"
#include "workbench/graph.hpp"

namespace wb {

/// Axis-parallel box with proper extent on every axis; axis 0 is the
/// distinguished direction (contacts must be degenerate there).
struct BoxD {
    int id = 0;
    std::vector<Interval> intervals;
};

struct BoxFamily {
    int dim = 0;
    std::vector<BoxD> boxes;  // unique ids, every box with `dim` intervals

    const BoxD* find(int id) const;
};

/// Vertices in id order; edge iff the closed boxes intersect (every axis
/// meet non-empty), single-point contacts included.
Graph box_graph(const BoxFamily& b);
std::vector<int> box_id_order(const BoxFamily& b);

struct CbuViolation {
    int id_a = 0;
    int id_b = 0;
    Meet axis0;  // the offending axis-0 overlap (a Segment)
};

/// Contact condition check: every intersecting pair must meet in a single
/// point on axis 0 (so the intersection lies in a hyperplane perpendicular
/// to the first axis). Boxes with degenerate intervals are malformed input
/// and throw; class violations are reported, never thrown.
struct CbuReport {
    bool valid = false;
    std::vector<CbuViolation> violations;  // sorted by id pair
    Graph graph;
};

CbuReport verify_cbu(const BoxFamily& b);

/// Appends interval [0,1] on a fresh axis to every box: the intersection
/// graph and the verdict are unchanged, the dimension rises by one.
BoxFamily lift_dim(const BoxFamily& b);

/// Exhaustive representation search on the normalized integer grid
/// (endpoints in [0, 2n]). Boxes are placed in descending-degree order with
/// incremental consistency checks; the first box is canonicalized up to
/// per-axis reflection. NoneComplete is only reported after the grid is
/// provably exhausted.
struct SearchResult {
    enum class Status { Representation, NoneComplete, Unknown };
    Status status = Status::Unknown;
    std::optional<BoxFamily> family;  // present iff Representation
    std::uint64_t nodes = 0;          // placement attempts
};

SearchResult search_cbu(const Graph& g, int dim, std::uint64_t budget = 200'000'000,
                        int max_n = 8, int max_dim = 3);

/// Random d-CBU families for property tests: boxes occupy single cells of a
/// shared axis-0 breakpoint sequence (at most one box per cell), so the
/// contact condition holds by construction while the other axes are free.
BoxFamily sample_valid_family(std::uint64_t seed, int dim, int boxes);

}  // namespace wb
