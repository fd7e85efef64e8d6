#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hline/certificate.hpp"
#include "hline/graph.hpp"
#include "hline/hline_operator.hpp"

namespace hline {

struct Budget {
  std::size_t max_iter = 30;
  std::size_t max_order = 512;
  std::uint64_t search_nodes = 10'000'000;  // per certificate check, per iterate

  /// Stable text form used to key cached results.
  std::string fingerprint() const;
};

enum class Outcome { Converged, Terminated, DivergedByOrder, Unknown };

/// SearchBudget: an isomorphism test between consecutive iterates ran out
/// of work budget, so neither convergence nor its absence is known.
enum class UnknownReason { OrderCap, IterCap, SearchBudget };

std::string_view to_string(Outcome o);
std::string_view to_string(UnknownReason r);

struct Classification {
  Outcome outcome = Outcome::Unknown;
  /// Converged: first k with HL^k ≅ HL^{k+1}. Terminated: index of the
  /// empty iterate. DivergedByOrder: iterate holding the certificate.
  std::size_t N = 0;
  std::optional<Graph> limit;               // Converged only
  std::optional<Certificate> certificate;   // DivergedByOrder only
  UnknownReason unknown_reason = UnknownReason::IterCap;
  /// Some certificate search hit its budget on some iterate.
  bool search_incomplete = false;
  SequenceTrace trace;
};

/// Iterates HL from g. Before each step the current iterate is checked for
/// Key1, LongTail, Spider and TwinDelta certificates in that order; the
/// first certificate found decides DivergedByOrder. An empty iterate gives
/// Terminated, two isomorphic consecutive iterates give Converged, and the
/// caps give Unknown.
Classification classify(const Graph& g, std::size_t n, const Budget& budget = {});

/// Runs the four certificate checks on a single graph, in classify's order.
CheckResult find_certificate(const Graph& g, std::size_t n, std::uint64_t search_nodes);

}  // namespace hline
