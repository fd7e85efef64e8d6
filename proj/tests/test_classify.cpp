#include "doctest.h"

#include "hline/certificate.hpp"
#include "hline/classify.hpp"
#include "hline/cycles.hpp"
#include "hline/enumerate.hpp"
#include "hline/families.hpp"
#include "oracles.hpp"

using namespace hline;

namespace {

WorkBudget fresh() { return WorkBudget(10'000'000); }

Graph with_pendants(const Graph& g, std::initializer_list<Vertex> at) {
  auto es = g.edges();
  Vertex next = static_cast<Vertex>(g.order());
  for (Vertex v : at) es.emplace_back(v, next++);
  return Graph(next, es);
}

/// Spanning-subgraph check by brute force over all bijections.
bool contains_spanning(const Graph& host, const Graph& pattern) {
  if (host.order() != pattern.order()) return false;
  std::vector<Vertex> perm(host.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const Edge& e : pattern.edges()) ok = ok && host.has_edge(perm[e.u], perm[e.v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("Key1 detection") {
  auto b = fresh();
  auto f6 = check_key1(make_fm(6), 5, b);
  REQUIRE(f6.certificate);
  const auto& w = std::get<Key1Witness>(f6.certificate->witness);
  CHECK(w.cycle.size() == 6);
  CHECK(verify_certificate(*f6.certificate).ok);
  b = fresh();
  CHECK_FALSE(check_key1(make_cycle(7), 5, b).certificate);
  b = fresh();
  CHECK_FALSE(check_key1(make_spider(3, 2, 2), 4, b).certificate);
}

TEST_CASE("LongTail detection") {
  auto b = fresh();
  auto r = check_long_tail(make_grm(2, 4), 5, b);
  REQUIRE(r.certificate);
  const auto& w = std::get<LongTailWitness>(r.certificate->witness);
  CHECK(w.copy.m() == 4);
  CHECK(w.copy.r() == 2);
  CHECK(verify_certificate(*r.certificate).ok);
  b = fresh();
  CHECK_FALSE(check_long_tail(make_grm(2, 4), 6, b).certificate);
  b = fresh();
  CHECK_FALSE(check_long_tail(make_cycle(6), 4, b).certificate);
}

TEST_CASE("Spider detection") {
  auto b = fresh();
  auto r = check_spider(make_spider(3, 3, 2), 6, b);
  REQUIRE(r.certificate);
  auto w = std::get<SpiderWitness>(r.certificate->witness);
  CHECK(w.k == 3);
  CHECK(w.d == 2);
  b = fresh();
  auto big = check_spider(make_spider(4, 4, 4), 8, b);
  REQUIRE(big.certificate);
  w = std::get<SpiderWitness>(big.certificate->witness);
  CHECK(w.k == 4);
  CHECK(w.d == 3);
  CHECK(verify_certificate(*big.certificate).ok);
  b = fresh();
  CHECK_FALSE(check_spider(make_spider(1, 1, 1), 4, b).certificate);
}

TEST_CASE("TwinDelta detection") {
  auto b = fresh();
  auto r = check_twin_delta(with_pendants(make_cycle(4), {0, 1}), 5, b);
  REQUIRE(r.certificate);
  const auto& w = std::get<TwinDeltaWitness>(r.certificate->witness);
  CHECK(w.first.m() == 4);
  CHECK(w.first.r() == 1);
  CHECK(w.first.edge_set() != w.second.edge_set());
  CHECK(verify_certificate(*r.certificate).ok);
  b = fresh();
  CHECK(delta_copies(make_grm(2, 4), 6, b).size() == 1);
  b = fresh();
  CHECK_FALSE(check_twin_delta(make_grm(2, 4), 6, b).certificate);
  b = fresh();
  CHECK_FALSE(check_twin_delta(make_cycle(6), 6, b).certificate);
}

TEST_CASE("tampered certificates are rejected") {
  auto b = fresh();
  auto key1 = *check_key1(make_fm(6), 5, b).certificate;
  auto bad = key1;
  std::get<Key1Witness>(bad.witness).cycle.pop_back();
  CHECK_FALSE(verify_certificate(bad).ok);
  bad = key1;
  bad.n = 7;
  CHECK_FALSE(verify_certificate(bad).ok);
  bad = key1;
  bad.host = make_cycle(6);
  CHECK_FALSE(verify_certificate(bad).ok);

  b = fresh();
  auto tail = *check_long_tail(make_grm(2, 4), 5, b).certificate;
  bad = tail;
  bad.n = 6;
  CHECK_FALSE(verify_certificate(bad).ok);

  b = fresh();
  auto twin = *check_twin_delta(with_pendants(make_cycle(4), {0, 1}), 5, b).certificate;
  bad = twin;
  auto& tw = std::get<TwinDeltaWitness>(bad.witness);
  tw.second = tw.first;
  CHECK_FALSE(verify_certificate(bad).ok);

  b = fresh();
  auto sp = *check_spider(make_spider(3, 3, 2), 6, b).certificate;
  bad = sp;
  std::get<SpiderWitness>(bad.witness).legs[0].pop_back();
  CHECK_FALSE(verify_certificate(bad).ok);
}

TEST_CASE("classify examples") {
  for (std::size_t n = 4; n <= 7; ++n) {
    for (std::size_t m = n; m <= n + 2; ++m) {
      auto c = classify(make_cycle(m), n);
      CHECK(c.outcome == Outcome::Converged);
      CHECK(c.N == 0);
      CHECK(is_isomorphic(*c.limit, make_cycle(m)));
    }
  }
  for (std::size_t n = 4; n <= 8; ++n) {
    for (std::size_t r = 1; r + 3 <= n; ++r) {
      auto c = classify(make_grm(r, n - r), n);
      CHECK(c.outcome == Outcome::Converged);
      CHECK(c.N == r);
    }
  }
  for (std::size_t n = 4; n <= 6; ++n) {
    for (std::size_t m = n; m <= n + 3; ++m) {
      auto c = classify(make_fm(m), n);
      REQUIRE(c.outcome == Outcome::DivergedByOrder);
      CHECK(c.certificate->kind() == CertificateKind::Key1);
    }
  }
  auto p4 = classify(make_path(4), 4);
  CHECK(p4.outcome == Outcome::Terminated);
  CHECK(p4.N == 3);
  CHECK(classify(Graph(), 4).outcome == Outcome::Terminated);
}

TEST_CASE("budget caps give Unknown") {
  auto iter = classify(make_grm(3, 3), 6, Budget{1, 512, 10'000'000});
  CHECK(iter.outcome == Outcome::Unknown);
  CHECK(iter.unknown_reason == UnknownReason::IterCap);
  auto order = classify(make_grm(3, 3), 6, Budget{30, 5, 10'000'000});
  CHECK(order.outcome == Outcome::Unknown);
  CHECK(order.unknown_reason == UnknownReason::OrderCap);
}

TEST_CASE("F_m iterates grow") {
  for (std::size_t n = 4; n <= 6; ++n) {
    const auto trace = hl_iterate(make_fm(n + 1), n, 3, 4096);
    REQUIRE(trace.steps.size() == 4);
    for (std::size_t k = 1; k < trace.steps.size(); ++k) CHECK(trace.steps[k].order > trace.steps[k - 1].order);
  }
}

TEST_CASE("converged graphs hold no certificate at any iterate") {
  for (const Graph& g : enumerate_connected_graphs(6)) {
    for (std::size_t n = 4; n <= 6; ++n) {
      const auto c = classify(g, n);
      if (c.outcome == Outcome::DivergedByOrder) CHECK(verify_certificate(*c.certificate).ok);
      if (c.outcome != Outcome::Converged) continue;
      for (const auto& step : c.trace.steps) {
        REQUIRE_FALSE(find_certificate(step.graph, n, 10'000'000).certificate);
      }
    }
  }
}

TEST_CASE("HL of a cycle plus a chord contains F_{m+1}") {
  for (std::size_t m = 4; m <= 6; ++m) {
    for (Vertex far = 2; far <= m / 2; ++far) {
      auto es = make_cycle(m).edges();
      es.emplace_back(0, far);
      const Graph g0(m, es);
      for (std::size_t n = 4; n <= m; ++n) {
        CAPTURE(m);
        CAPTURE(far);
        CAPTURE(n);
        CHECK(contains_spanning(hl_step(g0, n).graph, make_fm(m + 1)));
      }
    }
  }
}

TEST_CASE("Spider image shape") {
  for (std::size_t k = 2; k <= 4; ++k) {
    for (std::size_t d = 1; d < k; ++d) {
      const std::size_t n = k + d + 1;
      CAPTURE(k);
      CAPTURE(d);
      CHECK(is_isomorphic(hl_step(make_spider(k, k, d), n).graph, make_triangle_with_tails(k - 1, k - 1, d - 1)));
    }
  }
}
