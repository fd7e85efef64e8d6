#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hline/canonical.hpp"
#include "hline/classify.hpp"
#include "hline/graph.hpp"

namespace hline {

inline constexpr std::size_t kProperSubgraphEdgeCap = 22;

/// Every proper subgraph of g up to isomorphism: all nonempty edge
/// deletions with isolated vertices dropped, deduplicated by canonical
/// code. Includes the empty graph, excludes g. Ordered by (size, code).
/// Throws ResourceError when g has more than `edge_cap` edges.
std::vector<Graph> proper_subgraphs(const Graph& g, std::size_t edge_cap = kProperSubgraphEdgeCap);

enum class Lambda { Yes, No, Unknown };
std::string_view to_string(Lambda l);

struct SubgraphAudit {
  Graph graph;
  Outcome outcome = Outcome::Unknown;
};

struct MinimalityVerdict {
  Lambda status = Lambda::Unknown;
  Outcome outcome = Outcome::Unknown;  // classification of g itself
  /// Classification of every proper subgraph class; filled whenever g
  /// itself converges.
  std::vector<SubgraphAudit> audit;
};

/// Unique cycle of a connected unicyclic graph, the components of
/// G - V(C) (arms), and the cycle vertex each arm hangs from (root).
struct ArmDecomposition {
  std::vector<Vertex> cycle;
  std::vector<std::vector<Vertex>> arms;  // ordered by minimum vertex
  std::vector<Vertex> roots;              // roots[i] is the root of arms[i]
};

std::optional<ArmDecomposition> arm_decomposition(const Graph& g);

enum class Verdict { Pass, Fail, Skip };
std::string_view to_string(Verdict v);

struct PropertyCheck {
  char id = 'a';
  std::string name;
  Verdict verdict = Verdict::Skip;
  std::string detail;  // witness on failure, the unmet hypothesis on skip
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;  // a..h in order
  const PropertyCheck& at(char id) const { return checks.at(static_cast<std::size_t>(id - 'a')); }
};

struct SearchRecord {
  CanonicalCode code;
  Graph graph;
  Outcome outcome = Outcome::Unknown;
  Lambda status = Lambda::Unknown;
  std::vector<SubgraphAudit> audit;
};

struct SearchReport {
  std::size_t n = 0;
  std::size_t v_max = 0;
  bool unions = false;
  std::vector<SearchRecord> records;  // every candidate, by code; audits kept unless status is no
  std::size_t examined = 0;
  std::size_t yes = 0, no = 0, unknown = 0;
  /// Members of delta_n and cycles C_m (n <= m <= v_max) expected as yes.
  std::vector<std::string> expected;
  std::vector<std::string> expected_missing;
};

/// Classification service for one n and budget. Results are memoized by
/// canonical code; graphs are classified in canonical form so a result
/// depends only on the isomorphism class. Safe for concurrent use.
class Lab {
 public:
  Lab(std::size_t n, Budget budget = {});

  std::size_t n() const noexcept { return n_; }
  const Budget& budget() const noexcept { return budget_; }

  std::shared_ptr<const Classification> classify(const Graph& g);

  /// Requires g to have no isolated vertices.
  MinimalityVerdict minimality(const Graph& g);

  PropertyReport property_suite(const Graph& g);

  SearchReport find_minimal_members(std::size_t v_max, bool unions = false);

  /// Every memoized classification (for audits), ordered by code.
  std::vector<std::shared_ptr<const Classification>> memoized() const;

 private:
  std::size_t n_;
  Budget budget_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<const Classification>> memo_;
};

/// Yes iff g converges and no proper subgraph converges; Unknown when a
/// needed classification is Unknown.
Lambda is_minimally_convergent(const Graph& g, std::size_t n, const Budget& budget = {});

PropertyReport property_suite(const Graph& g, std::size_t n, const Budget& budget = {});

SearchReport find_minimal_members(std::size_t n, std::size_t v_max, const Budget& budget = {},
                                  bool unions = false);

/// Connected graphs on at most v_max vertices plus, when `unions`, disjoint
/// unions of two of them (each with an edge) of combined order <= v_max.
std::vector<Graph> sweep_candidates(std::size_t v_max, bool unions);

}  // namespace hline
