#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hline/budget.hpp"
#include "hline/graph.hpp"

namespace hline {

/// A copy of G^r_m inside a host graph: `cycle` is the m-cycle and `tail`
/// the r-vertex pendant path, with tail[0] adjacent to cycle[0].
struct TailedCycle {
  std::vector<Vertex> cycle;
  std::vector<Vertex> tail;

  std::size_t m() const { return cycle.size(); }
  std::size_t r() const { return tail.size(); }
  /// Sorted edge set of the copy.
  std::vector<Edge> edge_set() const;
};

/// Connected component `component` of the host holds a cycle of length
/// m >= n and the edge `extra`, which touches the cycle but is not one of
/// its edges (so the component is not C_m).
struct Key1Witness {
  std::size_t component = 0;
  std::vector<Vertex> cycle;
  Edge extra;
};

struct LongTailWitness {
  TailedCycle copy;  // m + r > n
};

/// CL(k, k, d) with d = n - k - 1: legs[0] and legs[1] have k vertices,
/// legs[2] has d; each leg's first vertex is adjacent to `center`.
struct SpiderWitness {
  Vertex center = 0;
  std::array<std::vector<Vertex>, 3> legs;
  std::size_t k = 0;
  std::size_t d = 0;
};

/// Two distinct copies of members of delta_n in one component.
struct TwinDeltaWitness {
  TailedCycle first;
  TailedCycle second;
};

enum class CertificateKind { Key1, LongTail, Spider, TwinDelta };

std::string_view to_string(CertificateKind k);

/// Witness that the sequence of a graph diverges by order. `host` is the
/// iterate HL^k(G) the witness lives in, with k = `found_at_iteration`.
struct Certificate {
  std::size_t n = 0;
  std::size_t found_at_iteration = 0;
  Graph host;
  std::variant<Key1Witness, LongTailWitness, SpiderWitness, TwinDeltaWitness> witness;

  CertificateKind kind() const { return static_cast<CertificateKind>(witness.index()); }
};

struct Verification {
  bool ok = true;
  std::string reason;  // first violated condition when !ok
};

/// Re-checks a certificate from its host and witness alone.
Verification verify_certificate(const Certificate& cert);

/// Outcome of one certificate search. `incomplete` is set when the work
/// budget ran out before the search could rule the pattern out.
struct CheckResult {
  std::optional<Certificate> certificate;
  bool incomplete = false;
};

/// A component with circumference m >= n that is not a cycle graph.
/// m is the exact circumference when the search completes within budget;
/// otherwise the longest cycle seen, provided it already reaches n.
CheckResult check_key1(const Graph& g, std::size_t n, WorkBudget& budget);

/// A G^r_m subgraph with m + r > n; returns the largest m + r found.
CheckResult check_long_tail(const Graph& g, std::size_t n, WorkBudget& budget);

/// A CL(k, k, n-k-1) subgraph for some k with n <= 2k and k + 1 < n.
CheckResult check_spider(const Graph& g, std::size_t n, WorkBudget& budget);

/// Two unequal delta_n subgraphs within one component.
CheckResult check_twin_delta(const Graph& g, std::size_t n, WorkBudget& budget);

/// Distinct delta_n copies in `g` (by edge set), at most `limit` of them.
std::vector<TailedCycle> delta_copies(const Graph& g, std::size_t n, WorkBudget& budget,
                                      std::size_t limit = static_cast<std::size_t>(-1));

}  // namespace hline
