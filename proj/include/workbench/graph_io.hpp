#pragma once

#include <string>

#include "workbench/graph.hpp"

namespace wb {

/// Standard graph6 encoding (short form for n <= 62, 3-byte length header up
/// to n = 258047, 6-byte header beyond). No trailing newline.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text);

/// Plain text: "n m" header, then one "u v" line per edge (u < v, sorted).
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);

/// DOT output for visualization; deterministic ordering.
std::string to_dot(const Graph& g);

/// Dispatch on content: graph6 lines have no spaces, edge lists start with
/// the "n m" header.
Graph parse_graph_auto(const std::string& text);

}  // namespace wb
