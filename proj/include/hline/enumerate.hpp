#pragma once

#include <cstddef>
#include <vector>

#include "hline/graph.hpp"

namespace hline {

inline constexpr std::size_t kEnumerationVertexCap = 9;

/// One representative (in canonical form) of every isomorphism class of
/// connected graphs with at most `v_max` vertices and `e_max` edges,
/// ordered by (order, size, canonical code).
///
/// Each order is grown from the previous one by attaching a pendant vertex,
/// then closed under single-edge additions; candidates are kept only if
/// their canonical code is new. Every connected graph has a non-cut vertex,
/// so every class is reached. Throws ResourceError when v_max exceeds
/// `vertex_cap`.
std::vector<Graph> enumerate_connected_graphs(std::size_t v_max, std::size_t e_max,
                                              std::size_t vertex_cap = kEnumerationVertexCap);

/// Same with no edge limit.
std::vector<Graph> enumerate_connected_graphs(std::size_t v_max);

}  // namespace hline
