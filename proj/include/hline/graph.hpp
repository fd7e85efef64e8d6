#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hline {

using Vertex = std::uint32_t;

/// Undirected edge, stored with endpoints normalized so that `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex x) const noexcept { return u == x || v == x; }
  /// The endpoint that is not `x`; `x` must be an endpoint.
  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..order()-1.
///
/// Immutable after construction. Adjacency lists are kept sorted, which
/// makes `has_edge` a binary search and keeps every derived output
/// deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order) : adj_(order) {}

  /// Throws InvalidArgument on self-loops, duplicate edges, or endpoints
  /// outside 0..order-1.
  Graph(std::size_t order, std::span<const Edge> edges);
  Graph(std::size_t order, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return adj_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  /// All edges, sorted lexicographically by (u, v).
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degree_sequence() const;  // non-increasing

  /// Graph with vertex `v` renamed to `perm[v]`.
  Graph relabeled(std::span<const Vertex> perm) const;
  /// Subgraph induced by `vertices`, renumbered in the given order.
  Graph induced(std::span<const Vertex> vertices) const;
  /// Drops isolated vertices, keeping the relative order of the rest.
  Graph without_isolated() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void add_checked(Vertex a, Vertex b);

  std::vector<std::vector<Vertex>> adj_;
  std::size_t size_ = 0;
};

/// Graph spanned by an edge list; the order is one more than the largest
/// endpoint (0 for an empty list).
Graph graph_from_edges(std::span<const Edge> edges);

/// Disjoint union; vertices of `b` are shifted by `a.order()`.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Connected components ordered by their minimum vertex; each sorted.
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);

/// Connected, order >= 3, every degree exactly 2.
bool is_cycle_graph(const Graph& g);

/// Connected with |E| = |V|.
bool is_unicyclic(const Graph& g);
bool is_forest(const Graph& g);

/// For connected unicyclic graphs, the cycle as a vertex sequence starting
/// at its minimum vertex and continuing toward the smaller of that vertex's
/// two cycle neighbors.
std::optional<std::vector<Vertex>> unique_cycle(const Graph& g);

}  // namespace hline
