#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hline/budget.hpp"
#include "hline/graph.hpp"

namespace hline {

inline constexpr std::uint64_t kDefaultCycleBudget = 10'000'000;

struct CycleSearch {
  std::size_t length = 0;      // 0 when no cycle was found
  std::vector<Vertex> cycle;   // vertex sequence of the best cycle
  bool exhausted = false;      // budget ran out before the search finished
};

/// Exact longest cycle by DFS from each start vertex (the start is the
/// minimum vertex of every cycle it closes), pruned by a reachability
/// bound. On budget exhaustion the best cycle found so far is returned.
CycleSearch longest_cycle(const Graph& g, WorkBudget& budget);

/// Longest cycle length, 0 for forests. Throws ResourceError when the
/// search exceeds `work_budget` nodes.
std::size_t circumference(const Graph& g, std::uint64_t work_budget = kDefaultCycleBudget);

/// Shortest cycle length, 0 for forests.
std::size_t girth(const Graph& g);

/// Edges that lie on no cycle, sorted.
std::vector<Edge> bridges(const Graph& g);

/// True when `v` lies on some cycle of `g`.
bool on_cycle(const Graph& g, Vertex v);

}  // namespace hline
