#include "hline/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>

#include "hline/conjectures.hpp"
#include "hline/cycles.hpp"
#include "hline/enumerate.hpp"
#include "hline/families.hpp"
#include "hline/minimality.hpp"
#include "hline/parallel.hpp"
#include "hline/paths.hpp"
#include "hline/reference.hpp"
#include "hline/report.hpp"

namespace hline::acceptance {

namespace {

std::vector<std::size_t> orders_in(const Options& o, std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out;
  for (std::size_t n = std::max(lo, o.n_lo); n <= std::min(hi, o.n_hi); ++n) out.push_back(n);
  return out;
}

bool iso(const Graph& a, const Graph& b) {
  CanonOptions opts;
  opts.max_order = std::max({opts.max_order, a.order(), b.order()});
  return is_isomorphic(a, b, opts);
}

std::string edges_text(const Graph& g) {
  std::string s;
  for (const Edge& e : g.edges()) s += (s.empty() ? "" : " ") + std::to_string(e.u) + "-" + std::to_string(e.v);
  return s;
}

// Collects failures and case counts for one criterion.
class Tally {
 public:
  void ok() { ++cases_; }
  void fail(const std::string& what) {
    std::lock_guard lock(mu_);
    ++cases_;
    if (failures_++ < 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  void check(bool cond, const std::string& what) { cond ? ok() : fail(what); }
  void count(std::size_t k) { cases_ += k; }

  bool passed() const { return failures_ == 0; }
  std::string summary() const {
    std::string s = std::to_string(cases_) + " cases";
    if (failures_ > 0) s += ", " + std::to_string(failures_) + " failed: " + first_;
    return s;
  }

 private:
  std::mutex mu_;
  std::atomic<std::size_t> cases_{0};
  std::atomic<std::size_t> failures_{0};
  std::string first_;
};

struct Runner {
  explicit Runner(const Options& o) : opts(o) {}

  const Options& opts;
  std::mutex cert_mu;
  std::vector<Certificate> certificates;
  std::vector<std::unique_ptr<Lab>> labs;

  void keep(const Classification& c) {
    if (!c.certificate) return;
    std::lock_guard lock(cert_mu);
    certificates.push_back(*c.certificate);
  }

  Lab& lab(std::size_t n) {
    labs.push_back(std::make_unique<Lab>(n, opts.budget));
    return *labs.back();
  }

  void grm_converges(Tally& t) {
    for (std::size_t n : orders_in(opts, 4, 8)) {
      for (std::size_t r = 1; r + 3 <= n; ++r) {
        const std::size_t m = n - r;
        const auto c = classify(make_grm(r, m), n, opts.budget);
        const std::string tag = "G(r=" + std::to_string(r) + ",m=" + std::to_string(m) + ") n=" + std::to_string(n);
        t.check(c.outcome == Outcome::Converged && c.N == r && c.limit && iso(*c.limit, make_cycle(n)),
                tag + " gave " + std::string(to_string(c.outcome)) + " N=" + std::to_string(c.N));
      }
    }
  }

  void long_tail(Tally& t) {
    for (std::size_t n : orders_in(opts, 4, 8)) {
      for (std::size_t s = n + 1; s <= n + 3; ++s) {
        for (std::size_t r = 1; r + 3 <= s; ++r) {
          const auto c = classify(make_grm(r, s - r), n, opts.budget);
          keep(c);
          const std::string tag =
              "G(r=" + std::to_string(r) + ",m=" + std::to_string(s - r) + ") n=" + std::to_string(n);
          t.check(c.outcome == Outcome::DivergedByOrder && c.certificate && verify_certificate(*c.certificate).ok,
                  tag + " gave " + std::string(to_string(c.outcome)));
        }
      }
    }
  }

  void fm(Tally& t) {
    for (std::size_t n : orders_in(opts, 4, 6)) {
      for (std::size_t m = n; m <= n + 3; ++m) {
        const Graph g = make_fm(m);
        const auto c = classify(g, n, opts.budget);
        keep(c);
        const std::string tag = "F" + std::to_string(m) + " n=" + std::to_string(n);
        t.check(c.outcome == Outcome::DivergedByOrder && c.certificate &&
                    c.certificate->kind() == CertificateKind::Key1 && verify_certificate(*c.certificate).ok,
                tag + " gave " + std::string(to_string(c.outcome)));
        Graph cur = g;
        std::vector<std::size_t> orders{cur.order()};
        for (int k = 1; k <= 3; ++k) {
          cur = hl_step(cur, n).graph;
          orders.push_back(cur.order());
        }
        t.check(std::adjacent_find(orders.begin(), orders.end(), std::greater_equal<>()) == orders.end(),
                tag + " orders not strictly increasing");
      }
    }
  }

  void spider(Tally& t) {
    const std::pair<std::size_t, std::size_t> tuples[] = {{2, 1}, {3, 2}, {3, 3}, {4, 3}};
    for (auto [k, d] : tuples) {
      const std::size_t n = k + d + 1;
      if (n < opts.n_lo || n > opts.n_hi) continue;
      const Graph g = make_spider(k, k, d);
      const std::string tag = "CL(" + std::to_string(k) + "," + std::to_string(k) + "," + std::to_string(d) + ")";
      const Graph expected = make_triangle_with_tails(k - 1, k - 1, d - 1);
      const Graph hl = hl_step(g, n).graph;
      t.check(iso(hl, expected), tag + " HL is " + edges_text(hl));
      const auto c = classify(g, n, opts.budget);
      keep(c);
      t.check(c.outcome == Outcome::DivergedByOrder && c.certificate && verify_certificate(*c.certificate).ok,
              tag + " gave " + std::string(to_string(c.outcome)));
    }
  }

  void single_component(Tally& t) {
    const auto graphs = enumerate_connected_graphs(7);
    for (std::size_t n : orders_in(opts, 4, 6)) {
      parallel_for(graphs.size(), [&](std::size_t i) {
        const Graph hl = hl_step(graphs[i], n).graph;
        std::size_t nontrivial = 0;
        for (const auto& comp : components(hl)) nontrivial += comp.size() > 1;
        t.check(nontrivial <= 1, edges_text(graphs[i]) + " n=" + std::to_string(n) + " has " +
                                     std::to_string(nontrivial) + " nontrivial components");
      });
    }
  }

  void adjacency_oracle(Tally& t) {
    const auto graphs = enumerate_connected_graphs(7);
    for (std::size_t n : orders_in(opts, 4, 6)) {
      parallel_for(graphs.size(), [&](std::size_t gi) {
        const Graph& g = graphs[gi];
        const Graph naive = reference::hl_step(g, n);
        const auto es = g.edges();
        std::size_t pairs = 0;
        for (std::size_t i = 0; i < es.size(); ++i) {
          for (std::size_t j = i + 1; j < es.size(); ++j) {
            const bool share = es[i].touches(es[j].u) || es[i].touches(es[j].v);
            if (!share) continue;
            ++pairs;
            if (pn_adjacent(g, es[i], es[j], n) != naive.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j))) {
              t.fail(edges_text(g) + " n=" + std::to_string(n) + " disagrees on the pair at edges " +
                     std::to_string(i) + "," + std::to_string(j));
              --pairs;
            }
          }
        }
        t.count(pairs);
      });
    }
  }

  void limits2(Tally& t) {
    std::vector<Graph> unicyclic;
    for (Graph& g : enumerate_connected_graphs(8, 8)) {
      if (is_unicyclic(g)) unicyclic.push_back(std::move(g));
    }
    for (std::size_t n : orders_in(opts, 4, 6)) {
      parallel_for(unicyclic.size(), [&](std::size_t i) {
        const Graph& g = unicyclic[i];
        const auto es = g.edges();
        if (!std::all_of(es.begin(), es.end(), [&](const Edge& e) { return edge_in_pn(g, e, n); })) return;
        const std::size_t cg = circumference(g), ch = circumference(hl_step(g, n).graph);
        t.check(ch >= cg, edges_text(g) + " n=" + std::to_string(n) + ": cr(HL)=" + std::to_string(ch) +
                              " < cr=" + std::to_string(cg));
      });
    }
  }

  void delta_in_lambda(Tally& t) {
    for (std::size_t n : orders_in(opts, 4, 6)) {
      Lab& l = lab(n);
      std::vector<std::pair<std::string, Graph>> members;
      for (std::size_t r = 1; r + 3 <= n; ++r) {
        members.emplace_back("G(r=" + std::to_string(r) + ",m=" + std::to_string(n - r) + ")", make_grm(r, n - r));
      }
      for (std::size_t m = n; m <= 8; ++m) members.emplace_back("C" + std::to_string(m), make_cycle(m));
      for (const auto& [name, g] : members) {
        const Lambda s = l.minimality(g).status;
        t.check(s == Lambda::Yes, name + " n=" + std::to_string(n) + " is " + std::string(to_string(s)));
      }
    }
  }

  void certificate_audit(Tally& t) {
    std::vector<Certificate> all = certificates;
    for (const auto& l : labs) {
      for (const auto& c : l->memoized()) {
        if (c->certificate) all.push_back(*c->certificate);
      }
    }
    for (const Certificate& c : all) {
      Verification v;
      try {
        v = verify_certificate(certificate_from_json(Json::parse(certificate_to_json(c).dump())));
      } catch (const std::exception& e) {
        v = {false, e.what()};
      }
      t.check(v.ok, std::string(to_string(c.kind())) + " certificate: " + v.reason);
    }
  }

  void conjectures(Tally& t) {
    for (std::size_t n : orders_in(opts, 4, 5)) {
      for (auto id : {ConjectureId::DivIffKey1, ConjectureId::NonIsoPair, ConjectureId::UnicyclicMin,
                      ConjectureId::Bridge}) {
        const std::string tag = std::string(to_string(id)) + " n=" + std::to_string(n);
        const auto rep = run_conjecture(id, n, 6, opts.budget);
        const Json j = conjecture_report_to_json(rep);
        const bool shaped = j.contains("status") && j.contains("candidates") && j.contains("examined") &&
                            std::is_sorted(rep.candidates.begin(), rep.candidates.end(),
                                           [](const auto& a, const auto& b) { return a.code < b.code; });
        t.check(shaped, tag + " report is malformed");
        for (const auto& c : rep.candidates) {
          const auto r = replay(c, n, opts.budget);
          t.check(!c.transcript.empty() && r.identical, tag + " candidate does not replay: " + r.mismatch);
        }
      }
    }
  }

  void structural(Tally& t) {
    for (std::size_t n : orders_in(opts, 4, 6)) {
      Lab& l = lab(n);
      const auto rep = l.find_minimal_members(7, true);
      for (const auto& rec : rep.records) {
        if (rec.status != Lambda::Yes) continue;
        const auto suite = l.property_suite(rec.graph);
        for (char id : {'a', 'c'}) {
          const auto& c = suite.at(id);
          t.check(c.verdict == Verdict::Pass, "(" + std::string(1, id) + ") on " + edges_text(rec.graph) +
                                                  " n=" + std::to_string(n) + ": " +
                                                  std::string(to_string(c.verdict)) + " " + c.detail);
        }
      }
    }
  }
};

}  // namespace

std::vector<CriterionResult> run_all(const Options& opts,
                                     const std::function<void(const CriterionResult&)>& progress) {
  Runner run{opts};
  struct Entry {
    int id;
    const char* name;
    double limit;
    void (Runner::*body)(Tally&);
  };
  const Entry entries[] = {
      {1, "G^r_m with r+m=n converges to C_n in r steps", 60, &Runner::grm_converges},
      {2, "G^r_m with n<r+m<=n+3 diverges by order", 60, &Runner::long_tail},
      {3, "F_m diverges by order via Key1, orders grow", 120, &Runner::fm},
      {4, "HL(CL(k,k,d)) is a triangle with tails and diverges", 60, &Runner::spider},
      {5, "HL(G) has at most one nontrivial component", 1800, &Runner::single_component},
      {6, "pn_adjacent agrees with all-paths enumeration", 0, &Runner::adjacency_oracle},
      {7, "cr(HL(G)) >= cr(G) for unicyclic G with every edge in a P_n", 0, &Runner::limits2},
      {8, "delta_n members and C_m (n<=m<=8) are minimally convergent", 600, &Runner::delta_in_lambda},
      {9, "every emitted certificate re-verifies from its JSON", 0, &Runner::certificate_audit},
      {10, "conjecture harness completes and candidates replay", 0, &Runner::conjectures},
      {11, "lambda_n members pass checks (a) and (c)", 0, &Runner::structural},
  };
  std::vector<CriterionResult> out;
  for (const Entry& s : entries) {
    Tally t;
    CriterionResult r;
    r.id = s.id;
    r.name = s.name;
    r.limit_seconds = s.limit;
    const auto start = std::chrono::steady_clock::now();
    try {
      (run.*s.body)(t);
    } catch (const std::exception& e) {
      t.fail(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = t.passed() && (s.limit == 0 || r.seconds <= s.limit);
    r.detail = t.summary();
    if (s.limit > 0 && r.seconds > s.limit) r.detail += ", over the time limit";
    if (progress) progress(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hline::acceptance
