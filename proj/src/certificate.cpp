#include "hline/certificate.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hline/cycles.hpp"

namespace hline {

namespace {

// First pass of the Key1 circumference search; a cycle of length >= n
// found here is accepted without proving it is the longest.
constexpr std::uint64_t kKey1QuickBudget = 200'000;

// Visits each simple cycle of length <= max_len once (from its minimum
// vertex, second vertex smaller than the last). The callback returns
// false to stop. Returns false if the budget ran out.
class CycleEnumerator {
 public:
  using Visit = std::function<bool(const std::vector<Vertex>&)>;

  CycleEnumerator(const Graph& g, std::size_t min_len, std::size_t max_len, WorkBudget& budget)
      : g_(g), min_len_(std::max<std::size_t>(3, min_len)), max_len_(max_len), budget_(budget),
        used_(g.order(), 0) {}

  bool run(const Visit& visit) {
    for (Vertex s = 0; s < g_.order(); ++s) {
      start_ = s;
      path_.assign(1, s);
      used_[s] = 1;
      bool go = extend(visit);
      used_[s] = 0;
      if (!go) return !budget_.exhausted();
    }
    return true;
  }

 private:
  bool extend(const Visit& visit) {
    if (!budget_.spend()) return false;
    const Vertex tail = path_.back();
    if (path_.size() >= min_len_ && path_[1] < tail && g_.has_edge(tail, start_)) {
      if (!visit(path_)) return false;
    }
    if (path_.size() >= max_len_) return true;
    for (Vertex w : g_.neighbors(tail)) {
      if (w <= start_ || used_[w]) continue;
      used_[w] = 1;
      path_.push_back(w);
      bool go = extend(visit);
      path_.pop_back();
      used_[w] = 0;
      if (!go) return false;
    }
    return true;
  }

  const Graph& g_;
  std::size_t min_len_, max_len_;
  WorkBudget& budget_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
  std::vector<char> used_;
};

// Longest simple path starting at `from`, avoiding blocked vertices,
// capped at `cap` vertices.
void longest_from(const Graph& g, Vertex from, std::size_t cap, std::vector<char>& blocked,
                  std::vector<Vertex>& path, std::vector<Vertex>& best, WorkBudget& budget) {
  if (!budget.spend()) return;
  blocked[from] = 1;
  path.push_back(from);
  if (path.size() > best.size()) best = path;
  if (path.size() < cap) {
    for (Vertex w : g.neighbors(from)) {
      if (blocked[w]) continue;
      longest_from(g, w, cap, blocked, path, best, budget);
      if (best.size() >= cap || budget.exhausted()) break;
    }
  }
  path.pop_back();
  blocked[from] = 0;
}

// Any simple path of exactly `len` vertices from `from`.
bool path_of(const Graph& g, Vertex from, std::size_t len, std::vector<char>& blocked,
             std::vector<Vertex>& path, WorkBudget& budget) {
  if (!budget.spend()) return false;
  blocked[from] = 1;
  path.push_back(from);
  if (path.size() == len) return true;
  for (Vertex w : g.neighbors(from)) {
    if (blocked[w]) continue;
    if (path_of(g, w, len, blocked, path, budget)) return true;
    if (budget.exhausted()) break;
  }
  path.pop_back();
  blocked[from] = 0;
  return false;
}

// Calls `visit` with every simple path of exactly `len` vertices from
// `from`; stops when it returns false. Blocked marks are restored.
bool each_path(const Graph& g, Vertex from, std::size_t len, std::vector<char>& blocked,
               std::vector<Vertex>& path, WorkBudget& budget,
               const std::function<bool(std::vector<Vertex>&)>& visit) {
  if (!budget.spend()) return false;
  blocked[from] = 1;
  path.push_back(from);
  bool go = true;
  if (path.size() == len) {
    go = visit(path);
  } else {
    for (Vertex w : g.neighbors(from)) {
      if (blocked[w]) continue;
      if (!each_path(g, w, len, blocked, path, budget, visit)) {
        go = false;
        break;
      }
    }
  }
  path.pop_back();
  blocked[from] = 0;
  return go;
}

// Rotates a cycle so that it starts at index i.
std::vector<Vertex> rotate_to(const std::vector<Vertex>& cycle, std::size_t i) {
  std::vector<Vertex> out(cycle.begin() + static_cast<std::ptrdiff_t>(i), cycle.end());
  out.insert(out.end(), cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

std::vector<Edge> cycle_edges(const std::vector<Vertex>& cycle) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < cycle.size(); ++i) es.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  return es;
}

bool distinct(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

bool valid_path(const Graph& host, const std::vector<Vertex>& p) {
  if (p.empty() || !distinct(p)) return false;
  for (Vertex v : p) {
    if (v >= host.order()) return false;
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!host.has_edge(p[i], p[i + 1])) return false;
  }
  return true;
}

bool valid_cycle(const Graph& host, const std::vector<Vertex>& c) {
  return c.size() >= 3 && valid_path(host, c) && host.has_edge(c.back(), c.front());
}

Verification fail(std::string why) { return {false, std::move(why)}; }

Verification verify_tailed(const Graph& host, const TailedCycle& t) {
  if (!valid_cycle(host, t.cycle)) return fail("cycle is not a cycle of the host");
  if (!valid_path(host, t.tail)) return fail("tail is not a path of the host");
  std::vector<Vertex> all(t.cycle);
  all.insert(all.end(), t.tail.begin(), t.tail.end());
  if (!distinct(all)) return fail("tail meets the cycle");
  if (!host.has_edge(t.cycle.front(), t.tail.front())) return fail("tail is not attached to cycle[0]");
  return {};
}

bool same_component(const Graph& g, Vertex a, Vertex b) {
  for (const auto& comp : components(g)) {
    bool ha = std::binary_search(comp.begin(), comp.end(), a);
    bool hb = std::binary_search(comp.begin(), comp.end(), b);
    if (ha || hb) return ha && hb;
  }
  return false;
}

Certificate make_cert(const Graph& g, std::size_t n) {
  Certificate c;
  c.n = n;
  c.host = g;
  return c;
}

}  // namespace

std::vector<Edge> TailedCycle::edge_set() const {
  std::vector<Edge> es = cycle_edges(cycle);
  if (!tail.empty()) {
    es.emplace_back(cycle.front(), tail.front());
    for (std::size_t i = 0; i + 1 < tail.size(); ++i) es.emplace_back(tail[i], tail[i + 1]);
  }
  std::sort(es.begin(), es.end());
  return es;
}

std::string_view to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::Key1: return "Key1";
    case CertificateKind::LongTail: return "LongTail";
    case CertificateKind::Spider: return "Spider";
    case CertificateKind::TwinDelta: return "TwinDelta";
  }
  return "?";
}

Verification verify_certificate(const Certificate& cert) {
  const Graph& host = cert.host;
  const std::size_t n = cert.n;
  if (n < 4) return fail("n must be at least 4");

  if (const auto* w = std::get_if<Key1Witness>(&cert.witness)) {
    if (!valid_cycle(host, w->cycle)) return fail("Key1 cycle is not a cycle of the host");
    if (w->cycle.size() < n) return fail("Key1 cycle is shorter than n");
    const auto comps = components(host);
    if (w->component >= comps.size()) return fail("Key1 component index out of range");
    const auto& comp = comps[w->component];
    for (Vertex v : w->cycle) {
      if (!std::binary_search(comp.begin(), comp.end(), v)) return fail("Key1 cycle leaves its component");
    }
    if (!host.has_edge(w->extra)) return fail("Key1 extra edge is not in the host");
    const bool touches = std::any_of(w->cycle.begin(), w->cycle.end(),
                                     [&](Vertex v) { return w->extra.touches(v); });
    if (!touches) return fail("Key1 extra edge does not touch the cycle");
    const auto ce = cycle_edges(w->cycle);
    if (std::find(ce.begin(), ce.end(), w->extra) != ce.end()) return fail("Key1 extra edge lies on the cycle");
    return {};
  }

  if (const auto* w = std::get_if<LongTailWitness>(&cert.witness)) {
    if (auto v = verify_tailed(host, w->copy); !v.ok) return v;
    if (w->copy.m() + w->copy.r() <= n) return fail("LongTail has m + r <= n");
    return {};
  }

  if (const auto* w = std::get_if<SpiderWitness>(&cert.witness)) {
    if (w->center >= host.order()) return fail("Spider centre out of range");
    if (!(n <= 2 * w->k && w->k + 1 < n)) return fail("Spider k violates n <= 2k, k + 1 < n");
    if (w->d != n - w->k - 1) return fail("Spider d != n - k - 1");
    const std::array<std::size_t, 3> want{w->k, w->k, w->d};
    std::vector<Vertex> all{w->center};
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& leg = w->legs[i];
      if (leg.size() != want[i]) return fail("Spider leg has the wrong order");
      if (!valid_path(host, leg)) return fail("Spider leg is not a path of the host");
      if (!host.has_edge(w->center, leg.front())) return fail("Spider leg is not attached to the centre");
      all.insert(all.end(), leg.begin(), leg.end());
    }
    if (!distinct(all)) return fail("Spider legs are not vertex-disjoint");
    return {};
  }

  const auto& w = std::get<TwinDeltaWitness>(cert.witness);
  for (const TailedCycle* t : {&w.first, &w.second}) {
    if (auto v = verify_tailed(host, *t); !v.ok) return v;
    if (t->m() + t->r() != n) return fail("TwinDelta copy is not in delta_n");
  }
  if (w.first.edge_set() == w.second.edge_set()) return fail("TwinDelta copies are equal");
  if (!same_component(host, w.first.cycle.front(), w.second.cycle.front())) {
    return fail("TwinDelta copies lie in different components");
  }
  return {};
}

CheckResult check_key1(const Graph& g, std::size_t n, WorkBudget& budget) {
  CheckResult result;
  const auto comps = components(g);
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const auto& comp = comps[ci];
    if (comp.size() < n) continue;
    const Graph sub = g.induced(comp);
    if (is_cycle_graph(sub)) continue;

    WorkBudget quick(std::min(kKey1QuickBudget, budget.remaining()));
    CycleSearch best = longest_cycle(sub, quick);
    budget.spend(quick.used());
    if (best.exhausted && best.length < n) {
      WorkBudget rest(budget.remaining());
      best = longest_cycle(sub, rest);
      budget.spend(rest.used());
    }
    if (best.length < n) {
      if (best.exhausted) result.incomplete = true;
      continue;
    }

    Certificate cert = make_cert(g, n);
    Key1Witness w;
    w.component = ci;
    for (Vertex v : best.cycle) w.cycle.push_back(comp[v]);
    const auto ce = cycle_edges(w.cycle);
    bool found = false;
    for (Vertex c : w.cycle) {
      for (Vertex x : g.neighbors(c)) {
        Edge e(c, x);
        if (std::find(ce.begin(), ce.end(), e) == ce.end()) {
          w.extra = e;
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) continue;  // unreachable for a connected non-cycle component
    cert.witness = std::move(w);
    result.certificate = std::move(cert);
    return result;
  }
  return result;
}

CheckResult check_long_tail(const Graph& g, std::size_t n, WorkBudget& budget) {
  CheckResult result;
  std::optional<TailedCycle> best;
  std::size_t best_total = n;  // must beat n
  const auto comps = components(g);
  std::vector<std::size_t> comp_size(g.order(), 0);
  for (const auto& comp : comps) {
    for (Vertex v : comp) comp_size[v] = comp.size();
  }

  std::vector<char> blocked(g.order(), 0);
  std::vector<Vertex> path, longest;
  CycleEnumerator cycles(g, 3, g.order(), budget);
  bool done = cycles.run([&](const std::vector<Vertex>& cycle) {
    const std::size_t m = cycle.size();
    const std::size_t limit = comp_size[cycle.front()];
    if (limit <= best_total) return true;
    for (Vertex v : cycle) blocked[v] = 1;
    for (std::size_t i = 0; i < m && !budget.exhausted(); ++i) {
      for (Vertex t : g.neighbors(cycle[i])) {
        if (blocked[t]) continue;
        longest.clear();
        path.clear();
        longest_from(g, t, limit - m, blocked, path, longest, budget);
        if (m + longest.size() > best_total) {
          best_total = m + longest.size();
          best = TailedCycle{rotate_to(cycle, i), longest};
        }
      }
    }
    for (Vertex v : cycle) blocked[v] = 0;
    return !budget.exhausted();
  });

  if (best) {
    Certificate cert = make_cert(g, n);
    cert.witness = LongTailWitness{std::move(*best)};
    result.certificate = std::move(cert);
  } else if (!done || budget.exhausted()) {
    result.incomplete = true;
  }
  return result;
}

CheckResult check_spider(const Graph& g, std::size_t n, WorkBudget& budget) {
  CheckResult result;
  std::vector<char> blocked(g.order(), 0);
  std::vector<Vertex> p0, p1, p2;
  for (Vertex c = 0; c < g.order(); ++c) {
    if (g.degree(c) < 3) continue;
    auto nb = g.neighbors(c);
    for (std::size_t k = (n + 1) / 2; k + 1 < n; ++k) {
      const std::size_t d = n - k - 1;
      std::optional<SpiderWitness> found;
      blocked[c] = 1;
      for (std::size_t i = 0; i < nb.size() && !found; ++i) {
        for (std::size_t j = i + 1; j < nb.size() && !found; ++j) {
          if (blocked[nb[i]] || blocked[nb[j]]) continue;
          p0.clear();
          each_path(g, nb[i], k, blocked, p0, budget, [&](std::vector<Vertex>& leg0) {
            if (blocked[nb[j]]) return true;
            p1.clear();
            return each_path(g, nb[j], k, blocked, p1, budget, [&](std::vector<Vertex>& leg1) {
              for (Vertex t : nb) {
                if (blocked[t]) continue;
                p2.clear();
                if (path_of(g, t, d, blocked, p2, budget)) {
                  for (Vertex v : p2) blocked[v] = 0;
                  found = SpiderWitness{c, {leg0, leg1, p2}, k, d};
                  return false;
                }
                if (budget.exhausted()) return false;
              }
              return true;
            });
          });
          if (budget.exhausted()) break;
        }
      }
      blocked[c] = 0;
      if (found) {
        Certificate cert = make_cert(g, n);
        cert.witness = std::move(*found);
        result.certificate = std::move(cert);
        return result;
      }
      if (budget.exhausted()) {
        result.incomplete = true;
        return result;
      }
    }
  }
  return result;
}

std::vector<TailedCycle> delta_copies(const Graph& g, std::size_t n, WorkBudget& budget,
                                      std::size_t limit) {
  std::vector<TailedCycle> out;
  std::set<std::vector<Edge>> seen;
  std::vector<char> blocked(g.order(), 0);
  std::vector<Vertex> path;
  CycleEnumerator cycles(g, 3, n - 1, budget);
  cycles.run([&](const std::vector<Vertex>& cycle) {
    const std::size_t r = n - cycle.size();
    for (Vertex v : cycle) blocked[v] = 1;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      for (Vertex t : g.neighbors(cycle[i])) {
        if (blocked[t]) continue;
        path.clear();
        each_path(g, t, r, blocked, path, budget, [&](std::vector<Vertex>& tail) {
          TailedCycle copy{rotate_to(cycle, i), tail};
          if (seen.insert(copy.edge_set()).second) out.push_back(std::move(copy));
          return out.size() < limit;
        });
      }
    }
    for (Vertex v : cycle) blocked[v] = 0;
    return out.size() < limit && !budget.exhausted();
  });
  return out;
}

CheckResult check_twin_delta(const Graph& g, std::size_t n, WorkBudget& budget) {
  CheckResult result;
  const auto comps = components(g);
  for (const auto& comp : comps) {
    if (comp.size() < n) continue;
    const Graph sub = g.induced(comp);
    const auto copies = delta_copies(sub, n, budget, 2);
    if (copies.size() >= 2) {
      auto lift = [&](const TailedCycle& t) {
        TailedCycle out;
        for (Vertex v : t.cycle) out.cycle.push_back(comp[v]);
        for (Vertex v : t.tail) out.tail.push_back(comp[v]);
        return out;
      };
      Certificate cert = make_cert(g, n);
      cert.witness = TwinDeltaWitness{lift(copies[0]), lift(copies[1])};
      result.certificate = std::move(cert);
      return result;
    }
    if (budget.exhausted()) {
      result.incomplete = true;
      return result;
    }
  }
  return result;
}

}  // namespace hline
