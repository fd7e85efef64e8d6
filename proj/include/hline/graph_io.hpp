#pragma once

#include <string>
#include <string_view>

#include "hline/graph.hpp"

namespace hline {

/// Edge-list text: `<count> ";" <u>-<v> ("," <u>-<v>)*`, whitespace
/// anywhere between tokens; the edge list may be empty. When every id is
/// below the count, ids are used as given. Otherwise the distinct ids are
/// compacted to 0.. in numeric order and the graph is padded with isolated
/// vertices up to the count. Self-loops, duplicate edges and malformed text
/// raise ParseError with the offending position.
Graph parse_edge_list(std::string_view text);

/// Renders "4; 0-1, 1-2, 2-3"; parse_edge_list inverts it exactly.
std::string to_edge_list(const Graph& g);

/// graph6 (optionally prefixed by ">>graph6<<"). Vertex i of the result is
/// vertex i of the encoded adjacency matrix.
Graph parse_graph6(std::string_view line);

/// graph6 of g in its own labeling, so decoding gives back g exactly.
std::string to_graph6(const Graph& g);

/// Dispatches on shape: text containing ';' is an edge list, text shaped
/// like a family spec ("C6", "G(r=1,m=3)", ...) builds that family, and
/// anything else is read as graph6.
Graph parse_graph(std::string_view text);

}  // namespace hline
