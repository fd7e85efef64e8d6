#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hline/canonical.hpp"
#include "hline/classify.hpp"
#include "hline/graph.hpp"
#include "hline/minimality.hpp"

namespace hline {

enum class ConjectureId { DivIffKey1, NonIsoPair, UnicyclicMin, Bridge };

std::string_view to_string(ConjectureId id);
/// Accepts the names printed by to_string; throws InvalidArgument otherwise.
ConjectureId parse_conjecture_id(std::string_view text);

enum class ConjectureStatus { NoCounterexample, CounterexampleFound, Inconclusive };
std::string_view to_string(ConjectureStatus s);

/// One classification a candidate depends on, replayable from the graph.
struct TranscriptEntry {
  std::string role;
  Graph graph;
  Outcome outcome = Outcome::Unknown;
  std::size_t N = 0;
};

struct ConjectureCandidate {
  Graph graph;
  CanonicalCode code;
  bool counterexample = false;  // false: a lead that a finite run cannot settle
  std::string note;
  std::vector<TranscriptEntry> transcript;
};

struct ConjectureReport {
  ConjectureId id = ConjectureId::DivIffKey1;
  std::size_t n = 0;
  std::size_t v_max = 0;
  Budget budget;
  std::size_t examined = 0;  // graphs meeting the conjecture's hypotheses
  std::size_t unknown = 0;   // classifications that came back Unknown
  std::vector<ConjectureCandidate> candidates;  // ordered by code
  ConjectureStatus status = ConjectureStatus::NoCounterexample;
};

struct ReplayResult {
  bool identical = true;
  std::string mismatch;
};

/// Reclassifies every transcript graph with a fresh memo and compares.
ReplayResult replay(const ConjectureCandidate& c, std::size_t n, const Budget& budget);

/// Sweeps the graphs on at most v_max vertices (or only `input` when
/// given). Counterexamples are replayed before being reported; one that
/// does not replay is demoted to a non-counterexample lead.
ConjectureReport run_conjecture(ConjectureId id, std::size_t n, std::size_t v_max, const Budget& budget = {},
                                const std::optional<Graph>& input = std::nullopt);

/// Members of lambda_n among g and its proper subgraphs, up to isomorphism.
/// Sets `unknown` when some membership could not be decided.
std::vector<Graph> lambda_subgraphs(Lab& lab, const Graph& g, bool& unknown);

}  // namespace hline
