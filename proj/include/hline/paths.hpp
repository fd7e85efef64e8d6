#pragma once

#include <cstddef>

#include "hline/graph.hpp"

namespace hline {

/// Edges e and f are P_n-adjacent when they share an endpoint and some
/// simple path on exactly n vertices contains both.
///
/// With e = (u, v) and f = (v, w), the search grows a simple extension A
/// from u and asks whether w can be extended by a disjoint B so that
/// |A| + 1 + |B| = n. Failed (A-set, |B|) states are memoized.
///
/// Throws InvalidArgument if n < 4, e == f, or either edge is not in g.
bool pn_adjacent(const Graph& g, const Edge& e, const Edge& f, std::size_t n);

/// True when some simple path on exactly n vertices contains e.
bool edge_in_pn(const Graph& g, const Edge& e, std::size_t n);

/// True when g contains a simple path on `order` vertices starting at
/// `start`.
bool has_path_from(const Graph& g, Vertex start, std::size_t order);

}  // namespace hline
