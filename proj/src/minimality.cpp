#include "hline/minimality.hpp"

#include <algorithm>
#include <unordered_set>

#include "hline/cycles.hpp"
#include "hline/enumerate.hpp"
#include "hline/error.hpp"
#include "hline/families.hpp"
#include "hline/hline_operator.hpp"
#include "hline/parallel.hpp"
#include "hline/paths.hpp"

namespace hline {

namespace {

CanonOptions canon_for(const Graph& g) {
  CanonOptions opts;
  opts.max_order = std::max(opts.max_order, g.order());
  return opts;
}

std::string edge_text(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

bool has_isolated(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

// Enumerates simple paths that cannot be extended at either end and have
// at least `min_order` vertices; `visit` returns false to stop.
template <class Visit>
bool each_maximal_path(const Graph& g, std::size_t min_order, WorkBudget& budget, Visit&& visit) {
  std::vector<char> used(g.order(), 0);
  std::vector<Vertex> path;
  auto extendable = [&](Vertex end) {
    for (Vertex w : g.neighbors(end)) {
      if (!used[w]) return true;
    }
    return false;
  };
  bool go = true;
  auto dfs = [&](auto&& self, Vertex v) -> void {
    if (!go || !budget.spend()) {
      go = false;
      return;
    }
    used[v] = 1;
    path.push_back(v);
    if (path.size() >= min_order && !extendable(path.front()) && !extendable(path.back())) {
      if (!visit(path)) go = false;
    }
    for (Vertex w : g.neighbors(v)) {
      if (!go) break;
      if (!used[w]) self(self, w);
    }
    path.pop_back();
    used[v] = 0;
  };
  for (Vertex s = 0; s < g.order() && go; ++s) dfs(dfs, s);
  return !budget.exhausted();
}

PropertyCheck check(char id, std::string name) {
  PropertyCheck c;
  c.id = id;
  c.name = std::move(name);
  return c;
}

void skip(PropertyCheck& c, std::string why) {
  c.verdict = Verdict::Skip;
  c.detail = std::move(why);
}

void conclude(PropertyCheck& c, bool ok, std::string witness) {
  c.verdict = ok ? Verdict::Pass : Verdict::Fail;
  if (!ok) c.detail = std::move(witness);
}

}  // namespace

std::string_view to_string(Lambda l) {
  switch (l) {
    case Lambda::Yes: return "yes";
    case Lambda::No: return "no";
    case Lambda::Unknown: return "unknown";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skip: return "skip";
  }
  return "?";
}

std::vector<Graph> proper_subgraphs(const Graph& g, std::size_t edge_cap) {
  const auto es = g.edges();
  if (es.size() > edge_cap) {
    throw ResourceError("proper subgraph enumeration capped at " + std::to_string(edge_cap) + " edges");
  }
  const std::uint64_t full = (std::uint64_t{1} << es.size()) - 1;
  std::unordered_set<std::string> seen;
  std::vector<std::pair<std::string, Graph>> found;
  std::vector<Edge> kept;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    kept.clear();
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (mask >> i & 1) kept.push_back(es[i]);
    }
    Graph sub = Graph(g.order(), kept).without_isolated();
    auto perm = canonical_labeling(sub, canon_for(sub));
    Graph canon = sub.relabeled(perm);
    std::string code = canonical_code(canon, canon_for(canon)).bytes();
    if (seen.insert(code).second) found.emplace_back(std::move(code), std::move(canon));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return a.first < b.first;
  });
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

std::optional<ArmDecomposition> arm_decomposition(const Graph& g) {
  auto cycle = unique_cycle(g);
  if (!cycle) return std::nullopt;
  ArmDecomposition d;
  d.cycle = *cycle;
  std::vector<char> on_cycle(g.order(), 0);
  for (Vertex v : d.cycle) on_cycle[v] = 1;

  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!on_cycle[v]) rest.push_back(v);
  }
  const Graph minus = g.induced(rest);
  for (const auto& comp : components(minus)) {
    std::vector<Vertex> arm;
    for (Vertex i : comp) arm.push_back(rest[i]);
    std::sort(arm.begin(), arm.end());
    Vertex root = 0;
    for (Vertex v : arm) {
      for (Vertex w : g.neighbors(v)) {
        if (on_cycle[w]) root = w;
      }
    }
    d.arms.push_back(std::move(arm));
    d.roots.push_back(root);
  }
  return d;
}

Lab::Lab(std::size_t n, Budget budget) : n_(n), budget_(budget) {
  if (n < 4) throw InvalidArgument("path order n must be at least 4");
}

std::shared_ptr<const Classification> Lab::classify(const Graph& g) {
  const auto opts = canon_for(g);
  const auto perm = canonical_labeling(g, opts);
  Graph canon = g.relabeled(perm);
  std::string key = canonical_code(canon, opts).bytes();
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  auto result = std::make_shared<const Classification>(hline::classify(canon, n_, budget_));
  std::lock_guard lock(mu_);
  return memo_.emplace(std::move(key), std::move(result)).first->second;
}

std::vector<std::shared_ptr<const Classification>> Lab::memoized() const {
  std::lock_guard lock(mu_);
  std::vector<std::shared_ptr<const Classification>> out;
  out.reserve(memo_.size());
  for (const auto& [code, c] : memo_) out.push_back(c);
  return out;
}

MinimalityVerdict Lab::minimality(const Graph& g) {
  if (has_isolated(g)) throw InvalidArgument("minimality test needs a graph without isolated vertices");
  MinimalityVerdict v;
  v.outcome = classify(g)->outcome;
  if (v.outcome == Outcome::Unknown) {
    v.status = Lambda::Unknown;
    return v;
  }
  if (v.outcome != Outcome::Converged) {
    v.status = Lambda::No;
    return v;
  }
  bool converged_sub = false, unknown_sub = false;
  for (Graph& sub : proper_subgraphs(g)) {
    Outcome o = classify(sub)->outcome;
    converged_sub = converged_sub || o == Outcome::Converged;
    unknown_sub = unknown_sub || o == Outcome::Unknown;
    v.audit.push_back({std::move(sub), o});
  }
  v.status = converged_sub ? Lambda::No : unknown_sub ? Lambda::Unknown : Lambda::Yes;
  return v;
}

PropertyReport Lab::property_suite(const Graph& g) {
  const std::size_t n = n_;
  const auto cls = classify(g);
  const bool known = cls->outcome != Outcome::Unknown;
  const bool converges = cls->outcome == Outcome::Converged;
  const Lambda lam = has_isolated(g) ? Lambda::Unknown : minimality(g).status;
  const bool minimal = lam == Lambda::Yes;
  const bool unicyclic = is_unicyclic(g);
  const HLGraph hl = hl_step(g, n);
  const std::string not_minimal =
      lam == Lambda::Unknown ? "membership in lambda_n unknown" : "not minimally convergent";
  const std::string not_converging = known ? "sequence does not converge" : "classification unknown";

  PropertyReport rep;

  // (a) every edge lies in a P_n
  auto a = check('a', "every edge in a copy of P_n");
  bool all_edges_in_pn = true;
  std::string missing;
  for (const Edge& e : g.edges()) {
    if (!edge_in_pn(g, e, n)) {
      all_edges_in_pn = false;
      if (missing.empty()) missing = "edge " + edge_text(e) + " lies in no P_n";
    }
  }
  if (!minimal) skip(a, not_minimal);
  else conclude(a, all_edges_in_pn, missing);
  rep.checks.push_back(a);

  // (b) non-extendable long paths end at pendant vertices
  auto b = check('b', "non-extendable paths of order >= n end at pendant vertices");
  bool in_delta = false;
  for (const Graph& d : delta_members(n)) in_delta = in_delta || is_isomorphic(g, d, canon_for(g));
  if (!minimal) {
    skip(b, not_minimal);
  } else if (in_delta) {
    skip(b, "graph is in delta_n");
  } else if (is_cycle_graph(g)) {
    skip(b, "graph is a cycle");
  } else {
    WorkBudget budget(budget_.search_nodes);
    std::string witness;
    bool complete = each_maximal_path(g, n, budget, [&](const std::vector<Vertex>& p) {
      if (g.degree(p.front()) == 1 && g.degree(p.back()) == 1) return true;
      witness = "path from " + std::to_string(p.front()) + " to " + std::to_string(p.back()) +
                " ends at a non-pendant vertex";
      return false;
    });
    if (witness.empty() && !complete) skip(b, "path enumeration exceeded its budget");
    else conclude(b, witness.empty(), witness);
  }
  rep.checks.push_back(b);

  // (c) HL(G) has as many components as G
  auto c = check('c', "HL(G) has the same number of components as G");
  const std::size_t comps_g = components(g).size();
  const std::size_t comps_hl = components(hl.graph).size();
  if (!minimal) skip(c, not_minimal);
  else conclude(c, comps_g == comps_hl,
                "G has " + std::to_string(comps_g) + " components, HL(G) has " + std::to_string(comps_hl));
  rep.checks.push_back(c);

  // (d) circumference does not drop
  auto d = check('d', "cr(HL(G)) >= cr(G) for unicyclic G with every edge in a P_n");
  if (!unicyclic) {
    skip(d, "graph is not unicyclic");
  } else if (!all_edges_in_pn) {
    skip(d, missing);
  } else {
    const std::size_t cr_g = circumference(g, budget_.search_nodes);
    const std::size_t cr_hl = circumference(hl.graph, budget_.search_nodes);
    conclude(d, cr_hl >= cr_g, "cr(HL(G)) = " + std::to_string(cr_hl) + " < cr(G) = " + std::to_string(cr_g));
  }
  rep.checks.push_back(d);

  // (e) HL of a unicyclic minimal graph is not a tree
  auto e = check('e', "HL(G) is not a tree for unicyclic G in lambda_n");
  if (!unicyclic) skip(e, "graph is not unicyclic");
  else if (!minimal) skip(e, not_minimal);
  else conclude(e, !(is_connected(hl.graph) && hl.graph.size() + 1 == hl.graph.order()), "HL(G) is a tree");
  rep.checks.push_back(e);

  const auto arms = arm_decomposition(g);

  // (f) arm edges are on no cycle of HL(G)
  auto f = check('f', "arm edges lie on no cycle of HL(G)");
  if (!unicyclic) {
    skip(f, "graph is not unicyclic");
  } else if (!converges) {
    skip(f, not_converging);
  } else {
    std::string witness;
    for (const auto& arm : arms->arms) {
      for (std::size_t i = 0; i < hl.provenance.size() && witness.empty(); ++i) {
        const Edge& pe = hl.provenance[i];
        const bool in_arm = std::binary_search(arm.begin(), arm.end(), pe.u) &&
                            std::binary_search(arm.begin(), arm.end(), pe.v);
        if (in_arm && on_cycle(hl.graph, static_cast<Vertex>(i))) {
          witness = "arm edge " + edge_text(pe) + " lies on a cycle of HL(G)";
        }
      }
    }
    conclude(f, witness.empty(), witness);
  }
  rep.checks.push_back(f);

  // (g) root-incident edges induce no cycle of order >= 4 in HL(G)
  auto gc = check('g', "edges at a root induce no cycle of order >= 4 in HL(G)");
  if (!unicyclic) {
    skip(gc, "graph is not unicyclic");
  } else if (!converges) {
    skip(gc, not_converging);
  } else {
    std::vector<Vertex> roots(arms->roots);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    std::string witness;
    for (Vertex r : roots) {
      std::vector<Vertex> incident;
      for (std::size_t i = 0; i < hl.provenance.size(); ++i) {
        if (hl.provenance[i].touches(r)) incident.push_back(static_cast<Vertex>(i));
      }
      const std::size_t cr = circumference(hl.graph.induced(incident), budget_.search_nodes);
      if (cr >= 4 && witness.empty()) {
        witness = "edges at root " + std::to_string(r) + " induce a cycle of order " + std::to_string(cr);
      }
    }
    conclude(gc, witness.empty(), witness);
  }
  rep.checks.push_back(gc);

  // (h) unicyclic components are preserved when g(HL(G)) > 4
  auto h = check('h', "HL(G) has unicyclic components when G does and g(HL(G)) > 4");
  bool comps_unicyclic = g.order() > 0;
  for (const auto& comp : components(g)) comps_unicyclic = comps_unicyclic && is_unicyclic(g.induced(comp));
  const std::size_t hl_girth = girth(hl.graph);
  if (!minimal) {
    skip(h, not_minimal);
  } else if (!comps_unicyclic) {
    skip(h, "G has a component that is not unicyclic");
  } else if (hl_girth <= 4) {
    skip(h, "g(HL(G)) = " + std::to_string(hl_girth));
  } else {
    std::string witness;
    for (const auto& comp : components(hl.graph)) {
      if (!is_unicyclic(hl.graph.induced(comp)) && witness.empty()) {
        witness = "HL(G) component containing vertex " + std::to_string(comp.front()) + " is not unicyclic";
      }
    }
    conclude(h, witness.empty(), witness);
  }
  rep.checks.push_back(h);
  return rep;
}

std::vector<Graph> sweep_candidates(std::size_t v_max, bool unions) {
  std::vector<Graph> connected = enumerate_connected_graphs(v_max);
  std::vector<Graph> out = connected;
  if (!unions) return out;
  for (std::size_t i = 0; i < connected.size(); ++i) {
    if (connected[i].size() == 0) continue;
    for (std::size_t j = i; j < connected.size(); ++j) {
      if (connected[j].size() == 0) continue;
      if (connected[i].order() + connected[j].order() > v_max) continue;
      out.push_back(disjoint_union(connected[i], connected[j]));
    }
  }
  return out;
}

SearchReport Lab::find_minimal_members(std::size_t v_max, bool unions) {
  SearchReport rep;
  rep.n = n_;
  rep.v_max = v_max;
  rep.unions = unions;

  std::vector<Graph> candidates;
  for (Graph& g : sweep_candidates(v_max, unions)) {
    if (!has_isolated(g)) candidates.push_back(std::move(g));
  }
  std::vector<SearchRecord> slots(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t i) {
    const Graph& g = candidates[i];
    MinimalityVerdict v = minimality(g);
    SearchRecord& rec = slots[i];
    rec.code = canonical_code(g, canon_for(g));
    rec.graph = g;
    rec.outcome = v.outcome;
    rec.status = v.status;
    if (v.status != Lambda::No) rec.audit = std::move(v.audit);
  });
  rep.examined = slots.size();
  for (SearchRecord& rec : slots) {
    switch (rec.status) {
      case Lambda::Yes: ++rep.yes; break;
      case Lambda::No: ++rep.no; break;
      case Lambda::Unknown: ++rep.unknown; break;
    }
    rep.records.push_back(std::move(rec));
  }
  std::sort(rep.records.begin(), rep.records.end(),
            [](const SearchRecord& a, const SearchRecord& b) { return a.code < b.code; });

  std::vector<std::pair<std::string, Graph>> expected;
  for (std::size_t r = 1; r + 3 <= n_; ++r) {
    if (n_ <= v_max) {
      expected.emplace_back("G(r=" + std::to_string(r) + ",m=" + std::to_string(n_ - r) + ")",
                            make_grm(r, n_ - r));
    }
  }
  for (std::size_t m = n_; m <= v_max; ++m) expected.emplace_back("C" + std::to_string(m), make_cycle(m));
  for (auto& [name, graph] : expected) {
    rep.expected.push_back(name);
    const auto code = canonical_code(graph, canon_for(graph));
    auto it = std::find_if(rep.records.begin(), rep.records.end(),
                           [&](const SearchRecord& r) { return r.code == code; });
    if (it == rep.records.end() || it->status != Lambda::Yes) rep.expected_missing.push_back(name);
  }
  return rep;
}

Lambda is_minimally_convergent(const Graph& g, std::size_t n, const Budget& budget) {
  Lab lab(n, budget);
  return lab.minimality(g).status;
}

PropertyReport property_suite(const Graph& g, std::size_t n, const Budget& budget) {
  Lab lab(n, budget);
  return lab.property_suite(g);
}

SearchReport find_minimal_members(std::size_t n, std::size_t v_max, const Budget& budget, bool unions) {
  Lab lab(n, budget);
  return lab.find_minimal_members(v_max, unions);
}

}  // namespace hline
