#include "hline/conjectures.hpp"

#include <algorithm>
#include <atomic>

#include "hline/enumerate.hpp"
#include "hline/error.hpp"
#include "hline/parallel.hpp"

namespace hline {

namespace {

constexpr std::size_t kKey1HorizonOrder = 128;

CanonOptions canon_for(const Graph& g) {
  CanonOptions opts;
  opts.max_order = std::max(opts.max_order, g.order());
  return opts;
}

TranscriptEntry entry(std::string role, const Graph& g, const Classification& c) {
  return {std::move(role), g, c.outcome, c.N};
}

ConjectureCandidate candidate(const Graph& g, bool counterexample, std::string note) {
  ConjectureCandidate c;
  c.graph = g;
  c.code = canonical_code(g, canon_for(g));
  c.counterexample = counterexample;
  c.note = std::move(note);
  return c;
}

bool orders_grow(const SequenceTrace& t) {
  if (t.steps.size() < 3) return false;
  for (std::size_t i = 2; i < t.steps.size(); ++i) {
    if (t.steps[i].order <= t.steps[i - 1].order) return false;
  }
  return true;
}

struct Sweep {
  Lab& lab;
  const Budget& budget;
  std::size_t n;
  std::atomic<std::size_t> examined{0};
  std::atomic<std::size_t> unknown{0};

  std::optional<ConjectureCandidate> div_iff_key1(const Graph& g) {
    const auto c = lab.classify(g);
    ++examined;
    if (c->outcome == Outcome::Unknown) {
      if (c->unknown_reason == UnknownReason::OrderCap && orders_grow(c->trace)) {
        auto lead = candidate(g, false,
                              "order cap reached after " + std::to_string(c->trace.steps.size()) +
                                  " iterates with strictly growing orders and no Key1 witness");
        lead.transcript.push_back(entry("input", g, *c));
        return lead;
      }
      ++unknown;
      return std::nullopt;
    }
    if (c->outcome != Outcome::DivergedByOrder || c->certificate->kind() == CertificateKind::Key1) {
      return std::nullopt;
    }
    const std::size_t horizon = std::min<std::size_t>(budget.max_order, kKey1HorizonOrder);
    Graph cur = c->certificate->host;
    std::size_t k = c->N;
    bool incomplete = false;
    for (; k < budget.max_iter && cur.order() <= horizon; ++k) {
      WorkBudget wb(budget.search_nodes);
      auto r = check_key1(cur, n, wb);
      if (r.certificate) return std::nullopt;
      incomplete = incomplete || r.incomplete;
      cur = hl_step(cur, n).graph;
    }
    auto lead = candidate(g, false,
                          "diverges by " + std::string(to_string(c->certificate->kind())) +
                              " but no Key1 witness up to iterate " + std::to_string(k) +
                              (incomplete ? " (some searches incomplete)" : ""));
    lead.transcript.push_back(entry("input", g, *c));
    return lead;
  }

  std::optional<ConjectureCandidate> non_iso_pair(const Graph& g) {
    if (!is_connected(g)) return std::nullopt;
    const auto c = lab.classify(g);
    if (c->outcome == Outcome::Unknown) {
      ++unknown;
      return std::nullopt;
    }
    if (c->outcome != Outcome::Converged) return std::nullopt;
    ++examined;
    std::vector<std::pair<Graph, std::shared_ptr<const Classification>>> converged;
    bool undecided = false;
    for (const Graph& sub : proper_subgraphs(g)) {
      auto s = lab.classify(sub);
      if (s->outcome == Outcome::Converged) converged.emplace_back(sub, s);
      undecided = undecided || s->outcome == Outcome::Unknown;
    }
    if (undecided) ++unknown;
    if (converged.size() < 2) return std::nullopt;
    auto hit = candidate(g, true,
                         std::to_string(converged.size()) +
                             " non-isomorphic convergent proper subgraphs in a convergent connected graph");
    hit.transcript.push_back(entry("input", g, *c));
    for (const auto& [sub, s] : converged) hit.transcript.push_back(entry("convergent-subgraph", sub, *s));
    return hit;
  }

  std::optional<ConjectureCandidate> unicyclic_min(const Graph& g) {
    MinimalityVerdict v = lab.minimality(g);
    if (v.status == Lambda::Unknown) {
      ++unknown;
      return std::nullopt;
    }
    if (v.status != Lambda::Yes) return std::nullopt;
    ++examined;
    for (const auto& comp : components(g)) {
      const Graph part = g.induced(comp);
      if (part.size() == part.order()) continue;
      auto hit = candidate(g, true, "minimally convergent graph with a component that is not unicyclic");
      hit.transcript.push_back(entry("input", g, *lab.classify(g)));
      for (const auto& a : v.audit) hit.transcript.push_back(entry("proper-subgraph", a.graph, *lab.classify(a.graph)));
      return hit;
    }
    return std::nullopt;
  }

  bool union_of_two_convergent(const Graph& g) {
    const auto comps = components(g);
    if (comps.size() < 2 || comps.size() > 16) return false;
    const std::uint32_t all = (1u << comps.size()) - 1;
    for (std::uint32_t mask = 1; mask < all; ++mask) {
      if (!(mask & 1)) continue;  // each split once
      std::vector<Vertex> left, right;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        auto& side = (mask >> i & 1) ? left : right;
        side.insert(side.end(), comps[i].begin(), comps[i].end());
      }
      if (lab.classify(g.induced(left))->outcome == Outcome::Converged &&
          lab.classify(g.induced(right))->outcome == Outcome::Converged) {
        return true;
      }
    }
    return false;
  }

  std::optional<ConjectureCandidate> bridge(const Graph& g) {
    const auto c = lab.classify(g);
    if (c->outcome == Outcome::Unknown) {
      ++unknown;
      return std::nullopt;
    }
    if (c->outcome != Outcome::Converged || union_of_two_convergent(g)) return std::nullopt;
    ++examined;
    bool undecided = false;
    auto members = lambda_subgraphs(lab, g, undecided);
    if (undecided) {
      ++unknown;
      return std::nullopt;
    }
    if (members.size() == 1) return std::nullopt;
    auto hit = candidate(g, true,
                         std::to_string(members.size()) + " minimally convergent subgraphs, expected exactly one");
    hit.transcript.push_back(entry("input", g, *c));
    for (const Graph& m : members) hit.transcript.push_back(entry("lambda-member", m, *lab.classify(m)));
    return hit;
  }
};

}  // namespace

std::string_view to_string(ConjectureId id) {
  switch (id) {
    case ConjectureId::DivIffKey1: return "Div-iff-Key1";
    case ConjectureId::NonIsoPair: return "NonIsoPair";
    case ConjectureId::UnicyclicMin: return "UnicyclicMin";
    case ConjectureId::Bridge: return "Bridge";
  }
  return "?";
}

ConjectureId parse_conjecture_id(std::string_view text) {
  for (auto id : {ConjectureId::DivIffKey1, ConjectureId::NonIsoPair, ConjectureId::UnicyclicMin,
                  ConjectureId::Bridge}) {
    if (text == to_string(id)) return id;
  }
  throw InvalidArgument("unknown conjecture id '" + std::string(text) +
                        "' (expected Div-iff-Key1, NonIsoPair, UnicyclicMin or Bridge)");
}

std::string_view to_string(ConjectureStatus s) {
  switch (s) {
    case ConjectureStatus::NoCounterexample: return "no-counterexample-within-bounds";
    case ConjectureStatus::CounterexampleFound: return "counterexample-found";
    case ConjectureStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<Graph> lambda_subgraphs(Lab& lab, const Graph& g, bool& unknown) {
  std::vector<Graph> pool = proper_subgraphs(g);
  pool.push_back(canonical_form(g, canon_for(g)));
  std::vector<Graph> out;
  for (const Graph& h : pool) {
    if (h.size() == 0) continue;
    switch (lab.minimality(h).status) {
      case Lambda::Yes: out.push_back(h); break;
      case Lambda::Unknown: unknown = true; break;
      case Lambda::No: break;
    }
  }
  return out;
}

ReplayResult replay(const ConjectureCandidate& c, std::size_t n, const Budget& budget) {
  Lab fresh(n, budget);
  ReplayResult r;
  for (std::size_t i = 0; i < c.transcript.size(); ++i) {
    const auto& e = c.transcript[i];
    const auto got = fresh.classify(e.graph);
    if (got->outcome != e.outcome || got->N != e.N) {
      r.identical = false;
      r.mismatch = "entry " + std::to_string(i) + " (" + e.role + "): recorded " +
                   std::string(to_string(e.outcome)) + " N=" + std::to_string(e.N) + ", replayed " +
                   std::string(to_string(got->outcome)) + " N=" + std::to_string(got->N);
      return r;
    }
  }
  return r;
}

ConjectureReport run_conjecture(ConjectureId id, std::size_t n, std::size_t v_max, const Budget& budget,
                                const std::optional<Graph>& input) {
  Lab lab(n, budget);
  ConjectureReport rep;
  rep.id = id;
  rep.n = n;
  rep.v_max = v_max;
  rep.budget = budget;

  const bool with_unions = id == ConjectureId::UnicyclicMin || id == ConjectureId::Bridge;
  std::vector<Graph> graphs;
  if (input) {
    graphs.push_back(input->without_isolated());
  } else {
    for (Graph& g : sweep_candidates(v_max, with_unions)) {
      if (g.size() > 0 && g.without_isolated().order() == g.order()) graphs.push_back(std::move(g));
    }
  }

  Sweep sweep{lab, budget, n};
  std::vector<std::optional<ConjectureCandidate>> slots(graphs.size());
  parallel_for(graphs.size(), [&](std::size_t i) {
    const Graph& g = graphs[i];
    if (g.size() == 0) return;
    switch (id) {
      case ConjectureId::DivIffKey1: slots[i] = sweep.div_iff_key1(g); break;
      case ConjectureId::NonIsoPair: slots[i] = sweep.non_iso_pair(g); break;
      case ConjectureId::UnicyclicMin: slots[i] = sweep.unicyclic_min(g); break;
      case ConjectureId::Bridge: slots[i] = sweep.bridge(g); break;
    }
  });

  for (auto& s : slots) {
    if (!s) continue;
    if (s->counterexample) {
      const auto r = replay(*s, n, budget);
      if (!r.identical) {
        s->counterexample = false;
        s->note += "; replay differed: " + r.mismatch;
      }
    }
    rep.candidates.push_back(std::move(*s));
  }
  std::sort(rep.candidates.begin(), rep.candidates.end(),
            [](const ConjectureCandidate& a, const ConjectureCandidate& b) { return a.code < b.code; });
  rep.examined = sweep.examined;
  rep.unknown = sweep.unknown;

  const bool found = std::any_of(rep.candidates.begin(), rep.candidates.end(),
                                 [](const ConjectureCandidate& c) { return c.counterexample; });
  if (found) rep.status = ConjectureStatus::CounterexampleFound;
  else if (rep.unknown > 0 || !rep.candidates.empty()) rep.status = ConjectureStatus::Inconclusive;
  else rep.status = ConjectureStatus::NoCounterexample;
  return rep;
}

}  // namespace hline
