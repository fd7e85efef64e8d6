#include "doctest.h"

#include "hline/enumerate.hpp"
#include "hline/error.hpp"
#include "hline/families.hpp"
#include "hline/hline_operator.hpp"
#include "hline/paths.hpp"
#include "hline/reference.hpp"
#include "oracles.hpp"

using namespace hline;

namespace {

Graph star(std::size_t leaves) {
  std::vector<Edge> es;
  for (Vertex i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return Graph(leaves + 1, es);
}

}  // namespace

TEST_CASE("hl_step matches the all-paths construction") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t order = 1 + rng() % 8;
    const Graph g = oracle::random_graph(rng, order, 0.35);
    for (std::size_t n = 4; n <= 6; ++n) {
      const HLGraph hl = hl_step(g, n);
      REQUIRE(hl.graph == reference::hl_step(g, n));
      REQUIRE(hl.provenance == g.edges());
      for (const Edge& e : hl.graph.edges()) {
        const Edge a = hl.provenance[e.u], b = hl.provenance[e.v];
        REQUIRE((a.touches(b.u) || a.touches(b.v)));
      }
    }
  }
}

TEST_CASE("hl_step examples") {
  CHECK(is_isomorphic(hl_step(make_cycle(4), 4).graph, make_cycle(4)));
  const Graph claw = hl_step(star(3), 4).graph;
  CHECK(claw.order() == 3);
  CHECK(claw.size() == 0);
  const Graph spider = hl_step(make_spider(3, 3, 2), 6).graph;
  CHECK(is_isomorphic(spider, make_triangle_with_tails(2, 2, 1)));
  CHECK(hl_step(Graph(), 4).graph.order() == 0);
  CHECK(hl_step(Graph(3), 4).graph.order() == 0);
}

TEST_CASE("pn_adjacent examples") {
  CHECK(pn_adjacent(make_cycle(5), Edge(0, 1), Edge(1, 2), 5));
  const Graph s = star(3);
  CHECK_FALSE(pn_adjacent(s, Edge(0, 1), Edge(0, 2), 4));
  // CL(3,3,2): centre 0, legs 1-2-3 and 4-5-6.
  const Graph cl = make_spider(3, 3, 2);
  CHECK(pn_adjacent(cl, Edge(0, 1), Edge(0, 4), 6));
  for (const Edge& e : make_cycle(6).edges()) CHECK(edge_in_pn(make_cycle(6), e, 6));
  CHECK_FALSE(edge_in_pn(s, Edge(0, 1), 4));
  // outer tail edge of G^2_4 (tail 4-5 hanging from 0)
  CHECK(edge_in_pn(make_grm(2, 4), Edge(4, 5), 6));
}

TEST_CASE("hl_iterate stop reasons") {
  auto c5 = hl_iterate(make_cycle(5), 5, 10, 100);
  CHECK(c5.stop == StopReason::FixedPoint);
  CHECK(c5.stop_index == 0);

  auto g13 = hl_iterate(make_grm(1, 3), 4, 10, 100);
  CHECK(g13.stop == StopReason::FixedPoint);
  CHECK(is_isomorphic(g13.steps.at(1).graph, make_cycle(4)));

  auto p4 = hl_iterate(make_path(4), 4, 10, 100);
  CHECK(p4.stop == StopReason::Empty);
  REQUIRE(p4.steps.size() == 4);
  CHECK(p4.steps[1].graph == reference::hl_step(p4.steps[0].graph, 4));
  CHECK(p4.steps[2].graph == reference::hl_step(p4.steps[1].graph, 4));
  CHECK(p4.steps[3].graph == reference::hl_step(p4.steps[2].graph, 4));
  CHECK(is_isomorphic(p4.steps[1].graph, make_path(3)));
  CHECK(p4.steps[2].order == 2);
  CHECK(p4.steps[2].size == 0);
  CHECK(p4.steps[3].order == 0);

  auto f = hl_iterate(make_fm(5), 4, 30, 12);
  CHECK(f.stop == StopReason::OrderCap);
  auto capped = hl_iterate(make_fm(5), 4, 2, 1000);
  CHECK(capped.stop == StopReason::IterCap);
  CHECK(capped.steps.size() == 3);

  CHECK_THROWS_AS(hl_iterate(make_cycle(5), 5, 0, 100), InvalidArgument);
  CHECK_THROWS_AS(hl_iterate(make_cycle(5), 5, 3, 4), InvalidArgument);
}

TEST_CASE("consecutive trace steps are one hl_step apart") {
  auto t = hl_iterate(make_fm(6), 5, 4, 200);
  for (std::size_t k = 1; k < t.steps.size(); ++k) {
    CHECK(t.steps[k].k == k);
    CHECK(t.steps[k].graph == hl_step(t.steps[k - 1].graph, 5).graph);
    CHECK(t.steps[k].order == t.steps[k - 1].size);
  }
}

TEST_CASE("adjacent HL vertices share exactly one endpoint") {
  for (const Graph& g : enumerate_connected_graphs(6)) {
    for (std::size_t n = 4; n <= 6; ++n) {
      const HLGraph hl = hl_step(g, n);
      for (const Edge& e : hl.graph.edges()) {
        const Edge a = hl.provenance[e.u], b = hl.provenance[e.v];
        const int shared = a.touches(b.u) + a.touches(b.v);
        REQUIRE(shared == 1);
      }
    }
  }
}
