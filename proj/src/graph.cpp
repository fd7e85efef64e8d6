#include "hline/graph.hpp"

#include <algorithm>
#include <string>

#include "hline/error.hpp"

namespace hline {

Graph::Graph(std::size_t order, std::span<const Edge> edges) : adj_(order) {
  for (const Edge& e : edges) add_checked(e.u, e.v);
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    if (std::adjacent_find(adj_[v].begin(), adj_[v].end()) != adj_[v].end()) {
      throw InvalidArgument("duplicate edge at vertex " + std::to_string(v));
    }
  }
}

Graph::Graph(std::size_t order,
             std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : adj_(order) {
  for (auto [a, b] : edges) add_checked(a, b);
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    if (std::adjacent_find(adj_[v].begin(), adj_[v].end()) != adj_[v].end()) {
      throw InvalidArgument("duplicate edge at vertex " + std::to_string(v));
    }
  }
}

void Graph::add_checked(Vertex a, Vertex b) {
  if (a == b) throw InvalidArgument("self-loop at vertex " + std::to_string(a));
  if (a >= adj_.size() || b >= adj_.size()) {
    throw InvalidArgument("edge " + std::to_string(a) + "-" + std::to_string(b) +
                          " outside vertex range 0.." +
                          std::to_string(adj_.size()));
  }
  adj_[a].push_back(b);
  adj_[b].push_back(a);
  ++size_;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= adj_.size() || b >= adj_.size()) return false;
  const auto& nb = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
  Vertex target = adj_[a].size() <= adj_[b].size() ? b : a;
  return std::binary_search(nb.begin(), nb.end(), target);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> d;
  d.reserve(adj_.size());
  for (const auto& nb : adj_) d.push_back(nb.size());
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  Graph out(order());
  for (Vertex u = 0; u < adj_.size(); ++u) {
    auto& nb = out.adj_[perm[u]];
    nb.reserve(adj_[u].size());
    for (Vertex v : adj_[u]) nb.push_back(perm[v]);
  }
  for (auto& nb : out.adj_) std::sort(nb.begin(), nb.end());
  out.size_ = size_;
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<std::int64_t> index(order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<std::int64_t>(i);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : adj_[vertices[i]]) {
      auto j = index[w];
      if (j > static_cast<std::int64_t>(i)) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph(vertices.size(), es);
}

Graph Graph::without_isolated() const {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < adj_.size(); ++v) {
    if (!adj_[v].empty()) keep.push_back(v);
  }
  if (keep.size() == adj_.size()) return *this;
  return induced(keep);
}

Graph graph_from_edges(std::span<const Edge> edges) {
  Vertex top = 0;
  bool any = false;
  for (const Edge& e : edges) {
    top = std::max(top, e.v);
    any = true;
  }
  return Graph(any ? top + 1 : 0, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (const Edge& e : b.edges()) es.emplace_back(e.u + shift, e.v + shift);
  return Graph(a.order() + b.order(), es);
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

bool is_unicyclic(const Graph& g) {
  return g.order() > 0 && g.size() == g.order() && is_connected(g);
}

bool is_forest(const Graph& g) {
  return g.size() + components(g).size() == g.order();
}

std::optional<std::vector<Vertex>> unique_cycle(const Graph& g) {
  if (!is_unicyclic(g)) return std::nullopt;

  // Strip leaves until only the cycle remains.
  std::vector<std::size_t> deg(g.order());
  std::vector<char> removed(g.order(), 0);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < g.order(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    Vertex v = leaves.back();
    leaves.pop_back();
    removed[v] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w] && --deg[w] == 1) leaves.push_back(w);
    }
  }

  Vertex start = 0;
  while (removed[start]) ++start;
  std::vector<Vertex> cycle{start};
  Vertex prev = start;
  Vertex cur = start;
  for (Vertex w : g.neighbors(start)) {
    if (!removed[w]) {
      cur = w;  // neighbors are sorted: first hit is the smaller one
      break;
    }
  }
  while (cur != start) {
    cycle.push_back(cur);
    Vertex next = cur;
    for (Vertex w : g.neighbors(cur)) {
      if (!removed[w] && w != prev) {
        next = w;
        break;
      }
    }
    prev = cur;
    cur = next;
  }
  return cycle;
}

}  // namespace hline
