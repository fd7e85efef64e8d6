#include "doctest.h"

#include "hline/cycles.hpp"
#include "hline/error.hpp"
#include "hline/families.hpp"
#include "hline/paths.hpp"
#include "hline/reference.hpp"
#include "oracles.hpp"

using namespace hline;

TEST_CASE("circumference matches subset Hamiltonicity") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t order = 3 + rng() % 6;
    const Graph g = oracle::random_graph(rng, order, 0.25 + 0.5 * (trial % 3) / 2.0);
    CAPTURE(trial);
    REQUIRE(circumference(g) == oracle::brute_circumference(g));
  }
}

TEST_CASE("cycle measures on families") {
  CHECK(circumference(make_cycle(7)) == 7);
  CHECK(circumference(make_fm(6)) == 6);
  CHECK(circumference(make_path(5)) == 0);
  CHECK(girth(make_fm(6)) == 3);
  CHECK(girth(make_cycle(9)) == 9);
  CHECK(girth(make_path(4)) == 0);
  CHECK(bridges(make_grm(2, 4)) == std::vector<Edge>{Edge(0, 4), Edge(4, 5)});
  CHECK(on_cycle(make_grm(2, 4), 1));
  CHECK_FALSE(on_cycle(make_grm(2, 4), 4));
}

TEST_CASE("longest cycle respects its budget") {
  Graph k8(8);
  std::vector<Edge> es;
  for (Vertex a = 0; a < 8; ++a)
    for (Vertex b = a + 1; b < 8; ++b) es.emplace_back(a, b);
  k8 = Graph(8, es);
  WorkBudget tiny(5);
  auto r = longest_cycle(k8, tiny);
  CHECK(r.exhausted);
  CHECK_THROWS_AS(circumference(k8, 5), ResourceError);
  CHECK(circumference(k8) == 8);
}

TEST_CASE("pn_adjacent agrees with brute-force path enumeration") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t order = 4 + rng() % 4;
    const Graph g = oracle::random_connected(rng, order, 0.45);
    const auto es = g.edges();
    for (std::size_t n = 4; n <= order; ++n) {
      const auto paths = oracle::brute_paths(g, n);
      auto on_path = [&](const std::vector<Vertex>& p, const Edge& e) {
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
          if (Edge(p[i], p[i + 1]) == e) return true;
        return false;
      };
      for (std::size_t i = 0; i < es.size(); ++i) {
        bool in_some = false;
        for (const auto& p : paths) in_some = in_some || on_path(p, es[i]);
        REQUIRE(edge_in_pn(g, es[i], n) == in_some);
        for (std::size_t j = i + 1; j < es.size(); ++j) {
          const bool share = es[i].touches(es[j].u) || es[i].touches(es[j].v);
          bool expected = false;
          for (const auto& p : paths) expected = expected || (share && on_path(p, es[i]) && on_path(p, es[j]));
          CAPTURE(trial);
          REQUIRE(pn_adjacent(g, es[i], es[j], n) == expected);
          REQUIRE(reference::pn_adjacent(g, es[i], es[j], n) == expected);
        }
      }
    }
  }
}

TEST_CASE("pn_adjacent preconditions") {
  const Graph g = make_path(4);
  CHECK_THROWS_AS(pn_adjacent(g, Edge(0, 1), Edge(1, 2), 3), InvalidArgument);
  CHECK_THROWS_AS(pn_adjacent(g, Edge(0, 1), Edge(0, 1), 4), InvalidArgument);
  CHECK_THROWS_AS(pn_adjacent(g, Edge(0, 2), Edge(1, 2), 4), InvalidArgument);
  CHECK_FALSE(pn_adjacent(g, Edge(0, 1), Edge(2, 3), 4));
  CHECK(pn_adjacent(g, Edge(0, 1), Edge(1, 2), 4));
  CHECK(has_path_from(g, 0, 4));
  CHECK_FALSE(has_path_from(g, 1, 4));
}

TEST_CASE("reference path listing") {
  CHECK(reference::all_simple_paths(make_cycle(5), 5).size() == 5);
  CHECK(reference::all_simple_paths(make_path(4), 3).size() == 2);
}
