#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "hline/canonical.hpp"
#include "hline/graph.hpp"

namespace hline {

/// HL(G): vertex i stands for edge `provenance[i]` of the predecessor.
/// Provenance is listed in the predecessor's sorted edge order.
struct HLGraph {
  Graph graph;
  std::vector<Edge> provenance;
};

/// One application of the P_n-line-graph operator.
HLGraph hl_step(const Graph& g, std::size_t n);

/// hl_iterate stops with the first four; classify additionally abandons a
/// sequence once a certificate is found or an isomorphism test runs out of
/// budget.
enum class StopReason { FixedPoint, Empty, OrderCap, IterCap, Certified, SearchBudget };

std::string_view to_string(StopReason r);

struct TraceStep {
  std::size_t k = 0;
  Graph graph;
  std::size_t order = 0;
  std::size_t size = 0;
  std::size_t component_count = 0;
};

struct SequenceTrace {
  std::size_t n = 0;
  std::vector<TraceStep> steps;  // steps[0] is the input graph
  StopReason stop = StopReason::IterCap;
  /// FixedPoint: first k with HL^k ≅ HL^{k+1}. Empty: index of the empty
  /// graph. Caps: index of the last recorded step.
  std::size_t stop_index = 0;
};

TraceStep make_step(std::size_t k, Graph g);

/// Iterates hl_step from g. Stops on the first of: an empty iterate,
/// HL^k ≅ HL^{k+1}, an iterate with more than `max_order` vertices, or
/// `max_iter` applications. `canon` bounds the isomorphism tests between
/// consecutive iterates (its cap is raised to max_order).
SequenceTrace hl_iterate(const Graph& g, std::size_t n, std::size_t max_iter, std::size_t max_order,
                         CanonOptions canon = {});

}  // namespace hline
