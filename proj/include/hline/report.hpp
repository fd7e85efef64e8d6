#pragma once

#include <cstddef>

#include "json.hpp"

#include "hline/canonical.hpp"
#include "hline/certificate.hpp"
#include "hline/classify.hpp"
#include "hline/conjectures.hpp"
#include "hline/graph.hpp"
#include "hline/hline_operator.hpp"
#include "hline/minimality.hpp"

namespace hline {

using Json = nlohmann::ordered_json;

/// {"order", "size", "edge_list", "graph6"}.
Json graph_to_json(const Graph& g);
/// Reads the "edge_list" member.
Graph graph_from_json(const Json& j);

/// {"kind", "n", "found_at_iteration", "host", "witness"}; the host graph
/// travels with the witness so the certificate verifies on its own.
Json certificate_to_json(const Certificate& c);
/// Throws InvalidArgument on malformed input.
Certificate certificate_from_json(const Json& j);

Json budget_to_json(const Budget& b);

/// [{"k", "order", "size", "components"}, ...]
Json trace_to_json(const SequenceTrace& t);

/// The classification report: tool_version, n, input_code, outcome, N,
/// unknown_reason (Unknown only), search_incomplete, budget, limit,
/// certificate and trace. Fields depend only on the isomorphism class of
/// the input when `c` was computed on its canonical form.
Json classification_to_json(const Classification& c, std::size_t n, const CanonicalCode& input_code,
                             const Budget& budget);

Json property_report_to_json(const PropertyReport& r);

/// With `all_records` false only yes and unknown records are listed.
Json search_report_to_json(const SearchReport& r, bool all_records);

Json conjecture_report_to_json(const ConjectureReport& r);

}  // namespace hline
