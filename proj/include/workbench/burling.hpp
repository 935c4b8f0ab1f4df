#pragma once

#include <optional>
#include <string>
#include <vector>

#include "workbench/coloring.hpp"
#include "workbench/geometry.hpp"
#include "workbench/graph.hpp"

namespace wb {

/// Level-k graph of the recursive triangle-free sequence together with its
/// family of special stable sets. Level 1 is a single vertex v with {{v}};
/// level k+1 takes a base copy B, and for every special S of B a fresh copy
/// C_S and, for every special S' of C_S, a fresh vertex adjacent to exactly
/// S'; the new specials are S + {v} and S + S'.
struct BurlingLevel {
    int level = 0;
    Graph graph;
    std::vector<std::vector<int>> specials;
};

/// Vertex ids are canonical: base block first, then per-special blocks in
/// special order (copy vertices, then the new vertices). Specials are listed
/// i-major, j-minor, S+{v} before S+S'.
BurlingLevel burling_abstract(int level, int max_level = 5);

/// Size recurrence: p1 = n1 = 1, p' = 2p^2, n' = n + p(n + p).
struct LevelCounts {
    long long vertices;
    long long specials;
};
LevelCounts burling_counts(int level);

/// For a proper coloring, returns the index of a special set carrying at
/// least `level` distinct colors. The recursion guarantees one exists; a
/// nullopt return signals a construction bug. Improper colorings are rejected.
std::optional<int> probe_lemma_check(const BurlingLevel& lv, const Coloring& c);

/// The border of an axis-aligned rectangle with nonempty interior.
struct Frame {
    int id = 0;
    Rect rect;

    Segment left() const   { return Segment::vertical_at(rect.x.lo, rect.y.lo, rect.y.hi); }
    Segment right() const  { return Segment::vertical_at(rect.x.hi, rect.y.lo, rect.y.hi); }
    Segment bottom() const { return Segment::horizontal_at(rect.y.lo, rect.x.lo, rect.x.hi); }
    Segment top() const    { return Segment::horizontal_at(rect.y.hi, rect.x.lo, rect.x.hi); }
};

enum class Side { Left, Right, Bottom, Top };
const char* side_name(Side s);

/// Probe: a closed rectangular region whose declared members must be exactly
/// the frames whose boundary meets it, and must form a stable set.
struct ProbeRecord {
    int id = 0;
    Rect region;
    std::vector<int> members;  // frame ids, sorted
};

struct FrameFamily {
    std::vector<Frame> frames;        // distinct ids
    std::vector<ProbeRecord> probes;  // optional

    const Frame* find(int id) const;
};

/// True point-set intersection of the two frame boundaries (16 side pairs).
bool frames_touch(const Frame& a, const Frame& b);

/// Vertices in id order; edge iff the boundaries intersect as point sets.
/// Returns the graph plus the id list in vertex order.
Graph frame_graph(const FrameFamily& f);
std::vector<int> frame_id_order(const FrameFamily& f);

struct AxiomViolation {
    std::string axiom;        // "A1" | "A2" | "A3" | "triangle" | "probe"
    std::vector<int> frames;  // involved ids (probe violations use probe id first)
    std::string reason;
};

/// Definition check: triangle-freeness of the intersection graph plus
/// A1: left sides touch nothing, and a right side that meets a frame meets
///     both its top and bottom sides;
/// A2: no third frame inside the intersection of two intersecting frames'
///     bounded regions;
/// A3: two nested frames meeting a common third frame F may only meet F's
///     top and bottom sides.
/// Violations are reported sorted, never thrown.
struct AxiomReport {
    bool triangle_free = false;
    bool a1_ok = false;
    bool a2_ok = false;
    bool a3_ok = false;
    std::vector<AxiomViolation> violations;
    bool pass() const { return triangle_free && a1_ok && a2_ok && a3_ok; }
};

AxiomReport verify_burling_axioms(const FrameFamily& f);

/// Checks the ProbeRecord invariants against the family: declared members
/// are exactly the frames meeting the region, and each member set is stable.
std::vector<AxiomViolation> verify_probes(const FrameFamily& f);

/// Frame realization of burling_abstract(level): passes the axiom check,
/// realizes that exact graph by id, and carries one probe per special set.
FrameFamily realize_frames(int level, int max_level = 3);

}  // namespace wb
