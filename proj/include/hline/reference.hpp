#pragma once

// Naive reference procedures. They share no code with the pruned searches
// they are compared against and are only meant for small graphs.

#include <cstddef>
#include <vector>

#include "hline/graph.hpp"

namespace hline::reference {

/// Every simple path on exactly `order` vertices, each listed once
/// (oriented so that the first vertex is smaller than the last).
std::vector<std::vector<Vertex>> all_simple_paths(const Graph& g, std::size_t order);

/// Does the vertex sequence `path` traverse edge `e`?
bool path_has_edge(const std::vector<Vertex>& path, const Edge& e);

/// Enumerates all paths of order n and tests containment of e and f.
bool pn_adjacent(const Graph& g, const Edge& e, const Edge& f, std::size_t n);
bool edge_in_pn(const Graph& g, const Edge& e, std::size_t n);

/// HL(g) built from the full path list.
Graph hl_step(const Graph& g, std::size_t n);

}  // namespace hline::reference
