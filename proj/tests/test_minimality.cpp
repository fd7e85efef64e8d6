#include "doctest.h"

#include "hline/canonical.hpp"
#include "hline/cycles.hpp"
#include "hline/enumerate.hpp"
#include "hline/families.hpp"
#include "hline/hline_operator.hpp"
#include "hline/minimality.hpp"
#include "hline/paths.hpp"
#include "oracles.hpp"

using namespace hline;

namespace {

std::set<std::pair<std::size_t, std::vector<Edge>>> brute_classes(const std::vector<Graph>& gs) {
  std::set<std::pair<std::size_t, std::vector<Edge>>> out;
  for (const Graph& g : gs) out.insert({g.order(), oracle::brute_code(g)});
  return out;
}

Graph star(std::size_t leaves) {
  std::vector<Edge> es;
  for (Vertex i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return Graph(leaves + 1, es);
}

/// Lambda membership decided from the brute subgraph list.
Lambda brute_lambda(Lab& lab, const Graph& g) {
  const Outcome self = lab.classify(g)->outcome;
  if (self == Outcome::Unknown) return Lambda::Unknown;
  if (self != Outcome::Converged) return Lambda::No;
  bool unknown = false;
  for (const auto& [order, code] : oracle::brute_proper_subgraphs(g)) {
    const Outcome o = lab.classify(Graph(order, code))->outcome;
    if (o == Outcome::Converged) return Lambda::No;
    unknown = unknown || o == Outcome::Unknown;
  }
  return unknown ? Lambda::Unknown : Lambda::Yes;
}

bool has_record(const SearchReport& r, const Graph& g, Lambda status) {
  const auto code = canonical_code(g);
  for (const auto& rec : r.records) {
    if (rec.code == code) return rec.status == status;
  }
  return false;
}

}  // namespace

TEST_CASE("proper_subgraphs examples") {
  const auto c4 = proper_subgraphs(make_cycle(4));
  CHECK(c4.size() == 5);
  CHECK(c4.front().order() == 0);
  const auto k2 = proper_subgraphs(make_path(2));
  REQUIRE(k2.size() == 1);
  CHECK(k2[0].order() == 0);
  const auto claw = proper_subgraphs(star(3));
  REQUIRE(claw.size() == 3);
  CHECK(is_isomorphic(claw[1], make_path(2)));
  CHECK(is_isomorphic(claw[2], make_path(3)));
}

TEST_CASE("proper_subgraphs agrees with brute force") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + rng() % 5, 0.5);
    const auto mine = proper_subgraphs(g);
    CHECK(brute_classes(mine) == oracle::brute_proper_subgraphs(g));
    CHECK(mine.size() == brute_classes(mine).size());
  }
}

TEST_CASE("proper_subgraphs is closed under taking subgraphs") {
  for (const Graph& g : enumerate_connected_graphs(5)) {
    const auto subs = proper_subgraphs(g);
    std::set<CanonicalCode> codes;
    for (const Graph& s : subs) codes.insert(canonical_code(s));
    for (const Graph& s : subs) {
      for (const Graph& t : proper_subgraphs(s)) REQUIRE(codes.count(canonical_code(t)));
    }
  }
}

TEST_CASE("is_minimally_convergent examples") {
  CHECK(is_minimally_convergent(make_grm(1, 4), 5) == Lambda::Yes);
  CHECK(is_minimally_convergent(make_cycle(5), 5) == Lambda::Yes);
  CHECK(is_minimally_convergent(disjoint_union(make_grm(1, 4), make_path(2)), 5) == Lambda::No);
  CHECK(is_minimally_convergent(star(3), 4) == Lambda::No);
  CHECK(is_minimally_convergent(make_path(6), 4) == Lambda::No);
}

TEST_CASE("minimality matches the brute subgraph list") {
  for (std::size_t n = 4; n <= 6; ++n) {
    Lab lab(n);
    for (const Graph& g : enumerate_connected_graphs(6)) {
      if (g.size() == 0) continue;
      CAPTURE(n);
      REQUIRE(lab.minimality(g).status == brute_lambda(lab, g));
    }
  }
}

TEST_CASE("arm_decomposition examples") {
  auto g24 = arm_decomposition(make_grm(2, 4));
  REQUIRE(g24);
  CHECK(g24->cycle.size() == 4);
  REQUIRE(g24->arms.size() == 1);
  CHECK(g24->arms[0].size() == 2);
  CHECK(g24->roots.size() == 1);

  auto c5 = arm_decomposition(make_cycle(5));
  REQUIRE(c5);
  CHECK(c5->arms.empty());

  auto img = arm_decomposition(hl_step(make_spider(3, 3, 2), 6).graph);
  REQUIRE(img);
  CHECK(img->cycle.size() == 3);
  std::vector<std::size_t> sizes;
  for (const auto& a : img->arms) sizes.push_back(a.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 2});
  std::set<Vertex> roots(img->roots.begin(), img->roots.end());
  CHECK(roots.size() == 3);

  CHECK_FALSE(arm_decomposition(make_path(4)));
  CHECK_FALSE(arm_decomposition(make_fm(5)));
  CHECK_FALSE(arm_decomposition(disjoint_union(make_cycle(3), make_cycle(3))));
}

TEST_CASE("arm_decomposition partitions the vertices") {
  for (const Graph& g : enumerate_connected_graphs(8, 8)) {
    if (!is_unicyclic(g)) continue;
    const auto d = arm_decomposition(g);
    REQUIRE(d);
    std::vector<int> seen(g.order(), 0);
    for (Vertex v : d->cycle) ++seen[v];
    REQUIRE(d->arms.size() == d->roots.size());
    for (std::size_t i = 0; i < d->arms.size(); ++i) {
      for (Vertex v : d->arms[i]) ++seen[v];
      std::size_t adjacent = 0;
      for (Vertex c : d->cycle) {
        bool touches = false;
        for (Vertex v : d->arms[i]) touches = touches || g.has_edge(c, v);
        adjacent += touches;
        if (touches) CHECK(c == d->roots[i]);
      }
      CHECK(adjacent == 1);
    }
    for (int s : seen) REQUIRE(s == 1);
  }
}

TEST_CASE("property_suite examples") {
  const auto c6 = property_suite(make_cycle(6), 6);
  for (char id : {'a', 'c', 'd', 'e'}) CHECK(c6.at(id).verdict == Verdict::Pass);
  for (const auto& c : c6.checks) CHECK(c.verdict != Verdict::Fail);

  const Graph g24 = make_grm(2, 4);
  const auto rep = property_suite(g24, 6);
  CHECK(rep.at('a').verdict == Verdict::Pass);
  CHECK(rep.at('d').verdict == Verdict::Pass);
  CHECK(oracle::brute_circumference(hl_step(g24, 6).graph) == 5);

  const auto claw = property_suite(star(3), 4);
  for (const auto& c : claw.checks) CHECK(c.verdict == Verdict::Skip);
}

TEST_CASE("cr(HL(G)) >= cr(G) on unicyclic graphs") {
  for (const Graph& g : enumerate_connected_graphs(7, 7)) {
    if (!is_unicyclic(g)) continue;
    for (std::size_t n = 4; n <= 6; ++n) {
      bool every = true;
      for (const Edge& e : g.edges()) every = every && edge_in_pn(g, e, n);
      if (!every) continue;
      REQUIRE(circumference(hl_step(g, n).graph) >= circumference(g));
    }
  }
}

TEST_CASE("minimal members pass (a) and (c)") {
  for (std::size_t n = 4; n <= 5; ++n) {
    Lab lab(n);
    for (const auto& rec : lab.find_minimal_members(6).records) {
      if (rec.status != Lambda::Yes) continue;
      const auto rep = lab.property_suite(rec.graph);
      CHECK(rep.at('a').verdict == Verdict::Pass);
      CHECK(rep.at('c').verdict == Verdict::Pass);
      for (const auto& c : rep.checks) CHECK(c.verdict != Verdict::Fail);
    }
  }
}

TEST_CASE("find_minimal_members examples") {
  const auto r4 = find_minimal_members(4, 6);
  CHECK(has_record(r4, make_grm(1, 3), Lambda::Yes));
  for (std::size_t m = 4; m <= 6; ++m) CHECK(has_record(r4, make_cycle(m), Lambda::Yes));
  CHECK(r4.expected_missing.empty());
  CHECK(r4.yes + r4.no + r4.unknown == r4.examined);
  for (const auto& rec : r4.records) {
    if (rec.status == Lambda::Yes) CHECK_FALSE(rec.audit.empty());
  }

  const auto r6 = find_minimal_members(6, 6);
  for (const Graph& d : delta_members(6)) CHECK(has_record(r6, d, Lambda::Yes));
  CHECK(has_record(r6, make_cycle(6), Lambda::Yes));

  CHECK(has_record(find_minimal_members(4, 4), star(3), Lambda::No));
}

TEST_CASE("search records are sorted and distinct") {
  const auto r = find_minimal_members(5, 6, {}, true);
  for (std::size_t i = 1; i < r.records.size(); ++i) CHECK(r.records[i - 1].code < r.records[i].code);
}
