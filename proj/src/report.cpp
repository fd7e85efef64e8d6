#include "hline/report.hpp"

#include "hline/error.hpp"
#include "hline/graph_io.hpp"
#include "hline/version.hpp"

namespace hline {

namespace {

Json vertices(const std::vector<Vertex>& vs) { return Json(vs); }

Json tailed_to_json(const TailedCycle& t) { return Json{{"cycle", vertices(t.cycle)}, {"tail", vertices(t.tail)}}; }

struct Reader {
  const Graph& host;

  [[noreturn]] static void bad(const std::string& what) { throw InvalidArgument("certificate: " + what); }

  const Json& field(const Json& j, const char* key) const {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
  }
  std::size_t count(const Json& j, const char* key) const {
    const Json& v = field(j, key);
    if (!v.is_number_unsigned()) bad(std::string("field '") + key + "' is not a non-negative integer");
    return v.get<std::size_t>();
  }
  Vertex vertex(const Json& v) const {
    if (!v.is_number_unsigned() || v.get<std::size_t>() >= host.order()) bad("vertex out of range");
    return v.get<Vertex>();
  }
  std::vector<Vertex> list(const Json& j, const char* key) const {
    const Json& v = field(j, key);
    if (!v.is_array()) bad(std::string("field '") + key + "' is not an array");
    std::vector<Vertex> out;
    for (const Json& x : v) out.push_back(vertex(x));
    return out;
  }
  TailedCycle tailed(const Json& j) const { return {list(j, "cycle"), list(j, "tail")}; }
};

}  // namespace

Json graph_to_json(const Graph& g) {
  return Json{{"order", g.order()}, {"size", g.size()}, {"edge_list", to_edge_list(g)}, {"graph6", to_graph6(g)}};
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("edge_list") || !j.at("edge_list").is_string()) {
    throw InvalidArgument("graph object needs an 'edge_list' string");
  }
  return parse_edge_list(j.at("edge_list").get<std::string>());
}

Json certificate_to_json(const Certificate& c) {
  Json w;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Key1Witness>) {
          w = Json{{"component", x.component}, {"cycle", vertices(x.cycle)}, {"extra", Json::array({x.extra.u, x.extra.v})}};
        } else if constexpr (std::is_same_v<T, LongTailWitness>) {
          w = tailed_to_json(x.copy);
        } else if constexpr (std::is_same_v<T, SpiderWitness>) {
          w = Json{{"center", x.center},
                   {"legs", Json::array({vertices(x.legs[0]), vertices(x.legs[1]), vertices(x.legs[2])})},
                   {"k", x.k},
                   {"d", x.d}};
        } else {
          w = Json{{"first", tailed_to_json(x.first)}, {"second", tailed_to_json(x.second)}};
        }
      },
      c.witness);
  return Json{{"kind", to_string(c.kind())},
              {"n", c.n},
              {"found_at_iteration", c.found_at_iteration},
              {"host", graph_to_json(c.host)},
              {"witness", std::move(w)}};
}

Certificate certificate_from_json(const Json& j) {
  if (!j.is_object()) Reader::bad("not an object");
  if (!j.contains("host")) Reader::bad("missing field 'host'");
  Certificate c;
  try {
    c.host = graph_from_json(j.at("host"));
  } catch (const Error& e) {
    Reader::bad(std::string("host: ") + e.what());
  }
  Reader r{c.host};
  c.n = r.count(j, "n");
  c.found_at_iteration = r.count(j, "found_at_iteration");
  const Json& kind = r.field(j, "kind");
  const Json& w = r.field(j, "witness");
  const std::string k = kind.is_string() ? kind.get<std::string>() : "";
  if (k == "Key1") {
    Key1Witness x;
    x.component = r.count(w, "component");
    x.cycle = r.list(w, "cycle");
    const Json& e = r.field(w, "extra");
    if (!e.is_array() || e.size() != 2) Reader::bad("Key1 extra must be a vertex pair");
    const Vertex a = r.vertex(e[0]), b = r.vertex(e[1]);
    if (a == b) Reader::bad("Key1 extra is a self-loop");
    x.extra = Edge(a, b);
    c.witness = std::move(x);
  } else if (k == "LongTail") {
    c.witness = LongTailWitness{r.tailed(w)};
  } else if (k == "Spider") {
    SpiderWitness x;
    x.center = r.vertex(r.field(w, "center"));
    const Json& legs = r.field(w, "legs");
    if (!legs.is_array() || legs.size() != 3) Reader::bad("Spider needs three legs");
    for (std::size_t i = 0; i < 3; ++i) {
      if (!legs[i].is_array()) Reader::bad("Spider leg is not an array");
      for (const Json& v : legs[i]) x.legs[i].push_back(r.vertex(v));
    }
    x.k = r.count(w, "k");
    x.d = r.count(w, "d");
    c.witness = std::move(x);
  } else if (k == "TwinDelta") {
    c.witness = TwinDeltaWitness{r.tailed(r.field(w, "first")), r.tailed(r.field(w, "second"))};
  } else {
    Reader::bad("unknown kind");
  }
  return c;
}

Json budget_to_json(const Budget& b) {
  return Json{{"max_iter", b.max_iter}, {"max_order", b.max_order}, {"search_nodes", b.search_nodes}};
}

Json trace_to_json(const SequenceTrace& t) {
  Json out = Json::array();
  for (const auto& s : t.steps) {
    out.push_back(Json{{"k", s.k}, {"order", s.order}, {"size", s.size}, {"components", s.component_count}});
  }
  return out;
}

Json classification_to_json(const Classification& c, std::size_t n, const CanonicalCode& input_code,
                             const Budget& budget) {
  Json j{{"tool_version", kToolVersion},
         {"n", n},
         {"input_code", input_code.hex()},
         {"outcome", to_string(c.outcome)},
         {"N", c.N}};
  if (c.outcome == Outcome::Unknown) j["unknown_reason"] = to_string(c.unknown_reason);
  j["search_incomplete"] = c.search_incomplete;
  j["budget"] = budget_to_json(budget);
  j["limit"] = c.limit ? graph_to_json(*c.limit) : Json(nullptr);
  j["certificate"] = c.certificate ? certificate_to_json(*c.certificate) : Json(nullptr);
  j["trace"] = trace_to_json(c.trace);
  return j;
}

Json property_report_to_json(const PropertyReport& r) {
  Json out = Json::array();
  for (const auto& c : r.checks) {
    out.push_back(Json{{"id", std::string(1, c.id)},
                       {"name", c.name},
                       {"verdict", to_string(c.verdict)},
                       {"detail", c.detail}});
  }
  return out;
}

Json search_report_to_json(const SearchReport& r, bool all_records) {
  Json records = Json::array();
  for (const auto& rec : r.records) {
    if (!all_records && rec.status == Lambda::No) continue;
    Json j{{"code", rec.code.hex()},
           {"graph", graph_to_json(rec.graph)},
           {"outcome", to_string(rec.outcome)},
           {"lambda", to_string(rec.status)}};
    if (rec.status != Lambda::No) {
      Json audit = Json::array();
      for (const auto& a : rec.audit) {
        audit.push_back(Json{{"edge_list", to_edge_list(a.graph)}, {"outcome", to_string(a.outcome)}});
      }
      j["audit"] = std::move(audit);
    }
    records.push_back(std::move(j));
  }
  return Json{{"tool_version", kToolVersion},
              {"n", r.n},
              {"v_max", r.v_max},
              {"unions", r.unions},
              {"examined", r.examined},
              {"counts", Json{{"yes", r.yes}, {"no", r.no}, {"unknown", r.unknown}}},
              {"expected", r.expected},
              {"expected_missing", r.expected_missing},
              {"records", std::move(records)}};
}

Json conjecture_report_to_json(const ConjectureReport& r) {
  Json cands = Json::array();
  for (const auto& c : r.candidates) {
    Json transcript = Json::array();
    for (const auto& e : c.transcript) {
      transcript.push_back(Json{{"role", e.role},
                                {"edge_list", to_edge_list(e.graph)},
                                {"outcome", to_string(e.outcome)},
                                {"N", e.N}});
    }
    cands.push_back(Json{{"code", c.code.hex()},
                         {"graph", graph_to_json(c.graph)},
                         {"counterexample", c.counterexample},
                         {"note", c.note},
                         {"transcript", std::move(transcript)}});
  }
  return Json{{"tool_version", kToolVersion},
              {"conjecture", to_string(r.id)},
              {"n", r.n},
              {"v_max", r.v_max},
              {"budget", budget_to_json(r.budget)},
              {"examined", r.examined},
              {"unknown", r.unknown},
              {"status", to_string(r.status)},
              {"candidates", std::move(cands)}};
}

}  // namespace hline
