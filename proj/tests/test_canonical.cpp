#include "doctest.h"

#include "hline/canonical.hpp"
#include "hline/error.hpp"
#include "hline/families.hpp"
#include "oracles.hpp"

using namespace hline;

TEST_CASE("canonical code is invariant under random relabeling") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t order = 1 + rng() % 8;
    const Graph g = oracle::random_graph(rng, order, 0.2 + 0.6 * (trial % 5) / 4.0);
    const Graph h = g.relabeled(oracle::random_permutation(rng, order));
    REQUIRE(canonical_code(g) == canonical_code(h));
    REQUIRE(canonical_form(g) == canonical_form(h));
  }
}

TEST_CASE("canonical code separates exactly the brute-force classes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t order = 3 + rng() % 5;
    const Graph a = oracle::random_graph(rng, order, 0.5);
    const Graph b = oracle::random_graph(rng, order, 0.5);
    if (a.size() != b.size()) continue;
    CAPTURE(trial);
    CHECK((canonical_code(a) == canonical_code(b)) == oracle::brute_isomorphic(a, b));
    CHECK(is_isomorphic(a, b) == oracle::brute_isomorphic(a, b));
  }
}

TEST_CASE("canonical labeling is a permutation onto the canonical form") {
  const Graph g = make_spider(3, 3, 2);
  auto perm = canonical_labeling(g);
  std::vector<Vertex> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (Vertex v = 0; v < g.order(); ++v) CHECK(sorted[v] == v);
  CHECK(g.relabeled(perm) == canonical_form(g));
}

TEST_CASE("highly symmetric graphs") {
  // Petersen graph against a relabeled copy, and against a 3-regular
  // non-isomorphic graph of the same order.
  Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  std::mt19937_64 rng(3);
  CHECK(is_isomorphic(petersen, petersen.relabeled(oracle::random_permutation(rng, 10))));
  Graph prism(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5},
                   {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
  CHECK_FALSE(is_isomorphic(petersen, prism));
  CHECK(canonical_code(make_cycle(20)) == canonical_code(make_cycle(20).relabeled(oracle::random_permutation(rng, 20))));
}

TEST_CASE("disconnected graphs and hex codes") {
  const Graph a = disjoint_union(make_cycle(4), make_path(3));
  const Graph b = disjoint_union(make_path(3), make_cycle(4));
  CHECK(canonical_code(a) == canonical_code(b));
  CHECK(canonical_code(Graph(5)) != canonical_code(Graph(4)));
  const auto code = canonical_code(a);
  CHECK(CanonicalCode::from_hex(code.hex()) == code);
}

TEST_CASE("order cap") {
  CHECK_THROWS_AS(canonical_code(make_cycle(25)), ResourceError);
  CanonOptions big;
  big.max_order = 30;
  CHECK_NOTHROW(canonical_code(make_cycle(25), big));
}
