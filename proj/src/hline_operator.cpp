#include "hline/hline_operator.hpp"

#include <algorithm>

#include "hline/error.hpp"
#include "hline/paths.hpp"

namespace hline {

HLGraph hl_step(const Graph& g, std::size_t n) {
  if (n < 4) throw InvalidArgument("path order n must be at least 4");
  HLGraph out;
  out.provenance = g.edges();
  const auto& es = out.provenance;
  auto index_of = [&](const Edge& e) {
    return static_cast<Vertex>(std::lower_bound(es.begin(), es.end(), e) - es.begin());
  };

  // Candidates are pairs of edges meeting at a vertex; anything else
  // cannot be P_n-adjacent.
  std::vector<Edge> hl_edges;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        Edge e(v, nb[i]), f(v, nb[j]);
        if (pn_adjacent(g, e, f, n)) hl_edges.emplace_back(index_of(e), index_of(f));
      }
    }
  }
  std::sort(hl_edges.begin(), hl_edges.end());
  out.graph = Graph(es.size(), hl_edges);
  return out;
}

std::string_view to_string(StopReason r) {
  switch (r) {
    case StopReason::FixedPoint: return "FixedPoint";
    case StopReason::Empty: return "Empty";
    case StopReason::OrderCap: return "OrderCap";
    case StopReason::IterCap: return "IterCap";
    case StopReason::Certified: return "Certified";
    case StopReason::SearchBudget: return "SearchBudget";
  }
  return "?";
}

TraceStep make_step(std::size_t k, Graph g) {
  TraceStep s;
  s.k = k;
  s.order = g.order();
  s.size = g.size();
  s.component_count = components(g).size();
  s.graph = std::move(g);
  return s;
}

SequenceTrace hl_iterate(const Graph& g, std::size_t n, std::size_t max_iter, std::size_t max_order,
                         CanonOptions canon) {
  if (n < 4) throw InvalidArgument("path order n must be at least 4");
  if (max_iter < 1) throw InvalidArgument("max_iter must be at least 1");
  if (max_order < g.order()) throw InvalidArgument("max_order is below the input order");
  canon.max_order = std::max(canon.max_order, max_order);

  SequenceTrace trace;
  trace.n = n;
  trace.steps.push_back(make_step(0, g));
  for (std::size_t k = 0;; ++k) {
    const Graph& cur = trace.steps.back().graph;
    if (cur.order() == 0) {
      trace.stop = StopReason::Empty;
      trace.stop_index = k;
      return trace;
    }
    if (k == max_iter) {
      trace.stop = StopReason::IterCap;
      trace.stop_index = k;
      return trace;
    }
    Graph next = hl_step(cur, n).graph;
    if (next.order() > max_order) {
      trace.steps.push_back(make_step(k + 1, std::move(next)));
      trace.stop = StopReason::OrderCap;
      trace.stop_index = k + 1;
      return trace;
    }
    const bool fixed = is_isomorphic(cur, next, canon);
    trace.steps.push_back(make_step(k + 1, std::move(next)));
    if (fixed) {
      trace.stop = StopReason::FixedPoint;
      trace.stop_index = k;
      return trace;
    }
  }
}

}  // namespace hline
