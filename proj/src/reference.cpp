#include "hline/reference.hpp"

#include <algorithm>
#include <set>

namespace hline::reference {

namespace {

void walk(const Graph& g, std::size_t order, std::vector<Vertex>& path, std::vector<char>& used,
          std::vector<std::vector<Vertex>>& out) {
  if (path.size() == order) {
    if (order == 1 || path.front() < path.back()) out.push_back(path);
    return;
  }
  for (Vertex w : g.neighbors(path.back())) {
    if (used[w]) continue;
    used[w] = 1;
    path.push_back(w);
    walk(g, order, path, used, out);
    path.pop_back();
    used[w] = 0;
  }
}

}  // namespace

std::vector<std::vector<Vertex>> all_simple_paths(const Graph& g, std::size_t order) {
  std::vector<std::vector<Vertex>> out;
  if (order == 0) return out;
  std::vector<char> used(g.order(), 0);
  std::vector<Vertex> path;
  for (Vertex s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    used[s] = 1;
    walk(g, order, path, used, out);
    used[s] = 0;
  }
  return out;
}

bool path_has_edge(const std::vector<Vertex>& path, const Edge& e) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (Edge(path[i], path[i + 1]) == e) return true;
  }
  return false;
}

bool pn_adjacent(const Graph& g, const Edge& e, const Edge& f, std::size_t n) {
  const bool share = e.touches(f.u) || e.touches(f.v);
  if (!share || e == f) return false;
  for (const auto& p : all_simple_paths(g, n)) {
    if (path_has_edge(p, e) && path_has_edge(p, f)) return true;
  }
  return false;
}

bool edge_in_pn(const Graph& g, const Edge& e, std::size_t n) {
  for (const auto& p : all_simple_paths(g, n)) {
    if (path_has_edge(p, e)) return true;
  }
  return false;
}

Graph hl_step(const Graph& g, std::size_t n) {
  const auto es = g.edges();
  auto index_of = [&](const Edge& e) {
    return static_cast<Vertex>(std::lower_bound(es.begin(), es.end(), e) - es.begin());
  };
  std::set<Edge> adj;
  for (const auto& p : all_simple_paths(g, n)) {
    for (std::size_t i = 0; i + 2 < p.size(); ++i) {
      adj.insert(Edge(index_of(Edge(p[i], p[i + 1])), index_of(Edge(p[i + 1], p[i + 2]))));
    }
  }
  std::vector<Edge> hl(adj.begin(), adj.end());
  return Graph(es.size(), hl);
}

}  // namespace hline::reference
