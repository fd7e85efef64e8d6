#include "hline/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>

#include "hline/canonical.hpp"
#include "hline/error.hpp"

namespace hline {

namespace {

struct Keyed {
  std::string code;
  Graph graph;
};

Graph with_edge(const Graph& g, Edge e) {
  auto es = g.edges();
  es.push_back(e);
  return Graph(g.order(), es);
}

Graph with_pendant(const Graph& g, Vertex at) {
  auto es = g.edges();
  es.emplace_back(at, static_cast<Vertex>(g.order()));
  return Graph(g.order() + 1, es);
}

}  // namespace

std::vector<Graph> enumerate_connected_graphs(std::size_t v_max, std::size_t e_max,
                                              std::size_t vertex_cap) {
  if (v_max > vertex_cap) {
    throw ResourceError("enumeration capped at " + std::to_string(vertex_cap) + " vertices, asked for " +
                        std::to_string(v_max));
  }
  std::vector<Graph> out;
  if (v_max == 0) return out;

  std::vector<Keyed> level{{canonical_code(Graph(1)).bytes(), Graph(1)}};
  out.push_back(Graph(1));

  for (std::size_t v = 2; v <= v_max; ++v) {
    std::unordered_set<std::string> seen;
    std::map<std::size_t, std::vector<Keyed>> by_size;
    auto offer = [&](Graph g) {
      Graph canon = canonical_form(g);
      std::string code = canonical_code(canon).bytes();
      if (seen.insert(code).second) by_size[canon.size()].push_back({std::move(code), std::move(canon)});
    };

    for (const Keyed& h : level) {
      if (h.graph.size() + 1 > e_max) continue;
      for (Vertex u = 0; u < h.graph.order(); ++u) offer(with_pendant(h.graph, u));
    }
    // Sizes only grow, so walking the map in key order reaches every
    // bucket after all its producers.
    for (auto it = by_size.begin(); it != by_size.end(); ++it) {
      if (it->first + 1 > e_max) break;
      for (std::size_t i = 0; i < it->second.size(); ++i) {
        const Graph g = it->second[i].graph;
        for (Vertex a = 0; a < v; ++a) {
          for (Vertex b = a + 1; b < v; ++b) {
            if (!g.has_edge(a, b)) offer(with_edge(g, Edge(a, b)));
          }
        }
      }
    }

    level.clear();
    for (auto& [size, bucket] : by_size) {
      std::sort(bucket.begin(), bucket.end(), [](const Keyed& a, const Keyed& b) { return a.code < b.code; });
      for (auto& k : bucket) level.push_back(std::move(k));
    }
    for (const Keyed& k : level) out.push_back(k.graph);
  }
  return out;
}

std::vector<Graph> enumerate_connected_graphs(std::size_t v_max) {
  return enumerate_connected_graphs(v_max, v_max * (v_max > 0 ? v_max - 1 : 0) / 2);
}

}  // namespace hline
