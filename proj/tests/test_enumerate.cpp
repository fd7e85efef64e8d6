#include "doctest.h"

#include "hline/canonical.hpp"
#include "hline/enumerate.hpp"
#include "hline/error.hpp"
#include "hline/families.hpp"
#include "oracles.hpp"

using namespace hline;

namespace {

std::size_t count_order(const std::vector<Graph>& gs, std::size_t order) {
  return static_cast<std::size_t>(
      std::count_if(gs.begin(), gs.end(), [&](const Graph& g) { return g.order() == order; }));
}

}  // namespace

TEST_CASE("tiny enumerations") {
  auto one = enumerate_connected_graphs(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].order() == 1);
  CHECK(one[0].size() == 0);

  auto three = enumerate_connected_graphs(3);
  REQUIRE(three.size() == 4);
  std::vector<std::size_t> sizes;
  for (const Graph& g : three) sizes.push_back(g.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(count_order(enumerate_connected_graphs(4), 4) == 6);
}

TEST_CASE("enumeration matches brute force up to order 6") {
  const auto all = enumerate_connected_graphs(6);
  for (std::size_t order = 1; order <= 6; ++order) {
    std::set<std::vector<Edge>> mine;
    for (const Graph& g : all) {
      if (g.order() != order) continue;
      REQUIRE(is_connected(g));
      mine.insert(oracle::brute_code(g));
    }
    CAPTURE(order);
    CHECK(count_order(all, order) == mine.size());
    CHECK(mine == oracle::brute_connected_classes(order));
  }
}

TEST_CASE("edge cap filters by size") {
  const auto all = enumerate_connected_graphs(6);
  const auto capped = enumerate_connected_graphs(6, 6);
  std::size_t expected = 0;
  for (const Graph& g : all) expected += g.size() <= 6;
  CHECK(capped.size() == expected);
  for (const Graph& g : capped) CHECK(g.size() <= 6);
}

TEST_CASE("enumeration is deterministic and canonical-distinct") {
  const auto a = enumerate_connected_graphs(7);
  const auto b = enumerate_connected_graphs(7);
  CHECK(a == b);
  std::set<CanonicalCode> codes;
  for (const Graph& g : a) codes.insert(canonical_code(g));
  CHECK(codes.size() == a.size());
  CHECK(count_order(a, 7) == 853);
}

TEST_CASE("vertex cap") {
  CHECK_THROWS_AS(enumerate_connected_graphs(kEnumerationVertexCap + 1), ResourceError);
}
