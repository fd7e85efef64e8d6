#include "hline/hline.h"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <new>
#include <string>

#include "hline/acceptance.hpp"
#include "hline/cache.hpp"
#include "hline/conjectures.hpp"
#include "hline/error.hpp"
#include "hline/families.hpp"
#include "hline/graph_io.hpp"
#include "hline/minimality.hpp"
#include "hline/report.hpp"
#include "hline/version.hpp"

struct hline_graph {
  hline::Graph g;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_line = 0;
thread_local std::size_t last_column = 0;

hline_status fail(hline_status s, const std::string& what) {
  last_error = what;
  return s;
}

template <class Body>
hline_status guarded(Body&& body) {
  last_error.clear();
  last_line = last_column = 0;
  try {
    body();
    return HLINE_OK;
  } catch (const hline::ParseError& e) {
    last_line = e.line();
    last_column = e.column();
    return fail(HLINE_PARSE, e.what());
  } catch (const hline::InvalidArgument& e) {
    return fail(HLINE_INVALID_ARGUMENT, e.what());
  } catch (const hline::ResourceError& e) {
    return fail(HLINE_RESOURCE, e.what());
  } catch (const hline::IoError& e) {
    return fail(HLINE_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HLINE_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(HLINE_INTERNAL, e.what());
  } catch (...) {
    return fail(HLINE_INTERNAL, "unknown error");
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw hline::InvalidArgument(what);
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

hline::Budget budget_of(const hline_budget* b) {
  hline::Budget out;
  if (b) {
    out.max_iter = b->max_iter;
    out.max_order = b->max_order;
    out.search_nodes = b->search_nodes;
  }
  return out;
}

std::string dump(const hline::Json& j) { return j.dump(2); }

std::filesystem::path cache_path(const char* dir) {
  return dir && *dir ? std::filesystem::path(dir) : hline::Cache::default_dir();
}

}  // namespace

extern "C" {

const char* hline_version(void) { return hline::kToolVersion; }

const char* hline_last_error(void) { return last_error.c_str(); }

void hline_last_error_position(size_t* line, size_t* column) {
  if (line) *line = last_line;
  if (column) *column = last_column;
}

void hline_string_free(char* s) { std::free(s); }

void hline_budget_default(hline_budget* out) {
  if (!out) return;
  const hline::Budget b;
  out->max_iter = b.max_iter;
  out->max_order = b.max_order;
  out->search_nodes = b.search_nodes;
}

hline_status hline_graph_parse(const char* text, hline_graph** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new hline_graph{hline::parse_graph(text)};
  });
}

hline_status hline_graph_family(const char* spec, hline_graph** out) {
  return guarded([&] {
    require(spec && out, "null argument");
    *out = new hline_graph{hline::FamilySpec::parse(spec).build()};
  });
}

hline_status hline_graph_from_edges(size_t order, const uint32_t* pairs, size_t edge_count, hline_graph** out) {
  return guarded([&] {
    require(out && (pairs || edge_count == 0), "null argument");
    std::vector<hline::Edge> edges;
    for (size_t i = 0; i < edge_count; ++i) {
      require(pairs[2 * i] != pairs[2 * i + 1], "self-loop");
      edges.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    }
    *out = new hline_graph{hline::Graph(order, edges)};
  });
}

void hline_graph_free(hline_graph* g) { delete g; }

size_t hline_graph_order(const hline_graph* g) { return g ? g->g.order() : 0; }

size_t hline_graph_size(const hline_graph* g) { return g ? g->g.size() : 0; }

hline_status hline_graph_edge_list(const hline_graph* g, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = copy_out(hline::to_edge_list(g->g));
  });
}

hline_status hline_graph_graph6(const hline_graph* g, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = copy_out(hline::to_graph6(g->g));
  });
}

hline_status hline_graph_canonical_code(const hline_graph* g, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = copy_out(hline::canonical_code(g->g).hex());
  });
}

hline_status hline_graph_is_isomorphic(const hline_graph* a, const hline_graph* b, int* out) {
  return guarded([&] {
    require(a && b && out, "null argument");
    *out = hline::is_isomorphic(a->g, b->g) ? 1 : 0;
  });
}

hline_status hline_hl_json(const hline_graph* g, size_t n, size_t steps, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    require(steps >= 1, "steps must be at least 1");
    hline::Json list = hline::Json::array();
    hline::Graph cur = g->g;
    for (size_t k = 1; k <= steps; ++k) {
      hline::HLGraph next = hline::hl_step(cur, n);
      hline::Json prov = hline::Json::array();
      for (const auto& e : next.provenance) prov.push_back(hline::Json::array({e.u, e.v}));
      list.push_back(hline::Json{{"k", k},
                                 {"order", next.graph.order()},
                                 {"size", next.graph.size()},
                                 {"components", hline::components(next.graph).size()},
                                 {"graph", hline::graph_to_json(next.graph)},
                                 {"provenance", std::move(prov)}});
      cur = std::move(next.graph);
      if (cur.order() == 0) break;
    }
    *out = copy_out(dump(hline::Json{{"tool_version", hline::kToolVersion},
                                     {"n", n},
                                     {"input", hline::graph_to_json(g->g)},
                                     {"steps", std::move(list)}}));
  });
}

hline_status hline_classify_json(const hline_graph* g, size_t n, const hline_budget* budget, const char* cache_dir,
                                 hline_outcome* outcome, int* cache_hit, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    std::optional<hline::Cache> cache;
    if (cache_dir) cache.emplace(cache_path(cache_dir));
    auto r = hline::classify_cached(g->g, n, budget_of(budget), cache ? &*cache : nullptr);
    if (cache) {
      for (const auto& w : cache->warnings()) std::cerr << "warning: " << w << '\n';
    }
    if (outcome) *outcome = static_cast<hline_outcome>(r.outcome);
    if (cache_hit) *cache_hit = r.hit ? 1 : 0;
    *out = copy_out(dump(r.report));
  });
}

hline_status hline_property_suite_json(const hline_graph* g, size_t n, const hline_budget* budget, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    const auto rep = hline::property_suite(g->g, n, budget_of(budget));
    *out = copy_out(dump(hline::Json{{"tool_version", hline::kToolVersion},
                                     {"n", n},
                                     {"graph", hline::graph_to_json(g->g)},
                                     {"checks", hline::property_report_to_json(rep)}}));
  });
}

hline_status hline_verify_certificate_json(const char* json, int* ok, char** reason) {
  return guarded([&] {
    require(json && ok, "null argument");
    const hline::Json j = hline::Json::parse(json, nullptr, false);
    if (j.is_discarded()) throw hline::ParseError("certificate is not valid JSON", 1, 1);
    const auto v = hline::verify_certificate(hline::certificate_from_json(j));
    *ok = v.ok ? 1 : 0;
    if (reason) *reason = copy_out(v.reason);
  });
}

hline_status hline_search_min_json(size_t n, size_t v_max, int unions, int all_records, const hline_budget* budget,
                                   size_t* unknown, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const auto rep = hline::find_minimal_members(n, v_max, budget_of(budget), unions != 0);
    if (unknown) *unknown = rep.unknown;
    auto j = hline::search_report_to_json(rep, all_records != 0);
    j["budget"] = hline::budget_to_json(budget_of(budget));
    *out = copy_out(dump(j));
  });
}

hline_status hline_conjecture_json(const char* id, size_t n, size_t v_max, const hline_graph* input,
                                   const hline_budget* budget, size_t* unknown, char** out) {
  return guarded([&] {
    require(id && out, "null argument");
    std::optional<hline::Graph> g;
    if (input) g = input->g;
    const auto rep = hline::run_conjecture(hline::parse_conjecture_id(id), n, v_max, budget_of(budget), g);
    if (unknown) *unknown = rep.unknown;
    *out = copy_out(dump(hline::conjecture_report_to_json(rep)));
  });
}

hline_status hline_verify_paper_json(size_t n_lo, size_t n_hi, const hline_budget* budget, hline_progress_fn progress,
                                     void* user, int* all_passed, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(n_lo >= 4 && n_lo <= n_hi, "n range must satisfy 4 <= lo <= hi");
    hline::acceptance::Options opts;
    opts.n_lo = n_lo;
    opts.n_hi = n_hi;
    opts.budget = budget_of(budget);
    auto to_json = [](const hline::acceptance::CriterionResult& r) {
      return hline::Json{{"id", r.id},
                         {"name", r.name},
                         {"passed", r.passed},
                         {"detail", r.detail},
                         {"seconds", r.seconds},
                         {"limit_seconds", r.limit_seconds}};
    };
    const auto results = hline::acceptance::run_all(opts, [&](const auto& r) {
      if (progress) progress(to_json(r).dump().c_str(), user);
    });
    hline::Json list = hline::Json::array();
    bool all = true;
    for (const auto& r : results) {
      all = all && r.passed;
      list.push_back(to_json(r));
    }
    if (all_passed) *all_passed = all ? 1 : 0;
    *out = copy_out(dump(hline::Json{{"tool_version", hline::kToolVersion},
                                     {"n_range", hline::Json::array({n_lo, n_hi})},
                                     {"all_passed", all},
                                     {"criteria", std::move(list)}}));
  });
}

hline_status hline_cache_dir(const char* dir, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = copy_out(cache_path(dir).string());
  });
}

hline_status hline_cache_stats_json(const char* dir, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    hline::Cache cache(cache_path(dir));
    const auto s = cache.stats();
    for (const auto& w : cache.warnings()) std::cerr << "warning: " << w << '\n';
    *out = copy_out(dump(hline::Json{{"dir", s.dir},
                                     {"tool_version", hline::kToolVersion},
                                     {"segments", s.segments},
                                     {"records", s.records},
                                     {"keys", s.keys},
                                     {"stale", s.stale},
                                     {"corrupt", s.corrupt},
                                     {"bytes", s.bytes}}));
  });
}

hline_status hline_cache_clear(const char* dir, size_t* removed) {
  return guarded([&] {
    hline::Cache cache(cache_path(dir));
    const std::size_t k = cache.clear();
    if (removed) *removed = k;
  });
}

}  // extern "C"
