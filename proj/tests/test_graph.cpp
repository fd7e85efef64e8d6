#include "doctest.h"

#include "hline/error.hpp"
#include "hline/families.hpp"
#include "hline/graph.hpp"

using namespace hline;

TEST_CASE("graph construction rejects bad edges") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidArgument);
}

TEST_CASE("edges are normalized and sorted") {
  Graph g(4, {{3, 2}, {1, 0}, {2, 0}});
  auto es = g.edges();
  REQUIRE(es.size() == 3);
  CHECK(es[0] == Edge(0, 1));
  CHECK(es[1] == Edge(0, 2));
  CHECK(es[2] == Edge(2, 3));
  CHECK(g.has_edge(3, 2));
  CHECK_FALSE(g.has_edge(1, 3));
  CHECK(g.degree_sequence() == std::vector<std::size_t>{2, 2, 1, 1});
}

TEST_CASE("components, union and isolated vertices") {
  Graph g = disjoint_union(make_cycle(3), make_path(2));
  CHECK(g.order() == 5);
  auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[1] == std::vector<Vertex>{3, 4});
  CHECK_FALSE(is_connected(g));
  Graph h(5, {{1, 3}});
  CHECK(h.without_isolated() == Graph(2, {{0, 1}}));
  CHECK(components(Graph(0)).empty());
}

TEST_CASE("relabel and induce") {
  Graph p = make_path(3);
  std::vector<Vertex> perm{2, 0, 1};
  Graph q = p.relabeled(perm);
  CHECK(q.has_edge(2, 0));
  CHECK(q.has_edge(0, 1));
  std::vector<Vertex> keep{2, 1};
  CHECK(p.induced(keep) == Graph(2, {{0, 1}}));
}

TEST_CASE("cycle structure predicates") {
  CHECK(is_cycle_graph(make_cycle(5)));
  CHECK_FALSE(is_cycle_graph(make_grm(1, 4)));
  CHECK(is_unicyclic(make_grm(2, 4)));
  CHECK_FALSE(is_unicyclic(make_fm(5)));
  CHECK(is_forest(make_spider(2, 2, 1)));
  auto c = unique_cycle(make_grm(2, 4));
  REQUIRE(c.has_value());
  CHECK(*c == std::vector<Vertex>{0, 1, 2, 3});
  CHECK_FALSE(unique_cycle(make_path(4)).has_value());
}

TEST_CASE("family layouts") {
  CHECK(make_grm(2, 3).order() == 5);
  CHECK(make_grm(2, 3).has_edge(0, 3));
  CHECK(make_grm(2, 3).has_edge(3, 4));
  CHECK(make_fm(6).size() == 7);
  CHECK(make_fm(6).has_edge(0, 2));
  Graph s = make_spider(1, 1, 1);
  CHECK(s.degree(0) == 3);
  CHECK(make_spider(3, 3, 2).order() == 9);
  CHECK(make_triangle_with_tails(1, 1, 0).order() == 5);
  CHECK(delta_members(6).size() == 3);
  CHECK_THROWS_AS(make_cycle(2), InvalidArgument);
}

TEST_CASE("family specs parse and print") {
  for (const char* text : {"C6", "P4", "G(r=2,m=4)", "F7", "CL(3,3,2)"}) {
    CAPTURE(text);
    CHECK(FamilySpec::looks_like(text));
    CHECK(FamilySpec::parse(text).to_string() == text);
  }
  CHECK(FamilySpec::parse(" G( r = 1 , m = 3 ) ").build() == make_grm(1, 3));
  CHECK_FALSE(FamilySpec::looks_like("C~"));
  CHECK_THROWS_AS(FamilySpec::parse("G(r=1)"), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("F3"), InvalidArgument);
}
