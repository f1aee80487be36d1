#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "degbound/oracle.hpp"

using namespace degbound;

namespace {

Graph k(int n) {
  std::vector<Graph::Edge> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.push_back({u, v});
  return Graph(n, std::move(e));
}

}  // namespace

TEST_CASE("bdvd_min_bruteforce finds minimum deletion sets") {
  Graph k4 = k(4);
  CHECK(bdvd_min_bruteforce(k4, 3) == VertexSet{});
  CHECK(bdvd_min_bruteforce(k4, 2) == VertexSet{1});      // lexicographically first minimum
  CHECK(bdvd_min_bruteforce(k4, 1) == VertexSet{1, 2});
  CHECK(bdvd_min_bruteforce(k4, 0) == VertexSet{1, 2, 3});

  Graph p5(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(bdvd_min_bruteforce(p5, 1) == VertexSet{3});
  CHECK(bdvd_min_bruteforce(p5, 0).size() == 2);

  CHECK_THROWS_AS(bdvd_min_bruteforce(Graph(1, {{1, 1}}), 1), Error);  // loops rejected
  CHECK_THROWS_AS(bdvd_min_bruteforce(k4, -1), Error);
}

TEST_CASE("dc_count_bruteforce matches the pinned counts") {
  // triangle, 2 colors, delta 1: all colorings except the two monochromatic ones
  CHECK(dc_count_bruteforce(k(3), 2, 1) == 6);
  // triangle, 3 colors, delta 0: proper 3-colorings of K3
  CHECK(dc_count_bruteforce(k(3), 3, 0) == 6);
  CHECK(dc_count_bruteforce(k(3), 2, 0) == 0);
  CHECK(dc_count_bruteforce(k(3), 2, 2) == 8);
  // empty graph: all chi^n colorings are valid
  CHECK(dc_count_bruteforce(Graph(3, {}), 3, 0) == 27);
}

TEST_CASE("dc_decide_bruteforce returns the first witness or nothing") {
  auto w = dc_decide_bruteforce(k(4), 2, 1);
  REQUIRE(w.has_value());
  CHECK(*w == Coloring{1, 1, 2, 2});  // lexicographically first valid coloring
  CHECK(verify_coloring(k(4), *w, 2, 1));
  CHECK_FALSE(dc_decide_bruteforce(k(3), 2, 0).has_value());
  auto one = dc_decide_bruteforce(Graph(1, {}), 1, 0);
  REQUIRE(one.has_value());
  CHECK(*one == Coloring{1});
}

TEST_CASE("verify_detecting_family enumerates difference vectors") {
  // the pinned counterexample: sets {1,2} and {2,3} miss h = (1,-1,1)
  std::vector<int> ce;
  CHECK_FALSE(verify_detecting_family(3, 2, {{1, 2}, {2, 3}}, &ce));
  REQUIRE(ce.size() == 3);
  long long s1 = ce[0] + ce[1], s2 = ce[1] + ce[2];
  CHECK(s1 == 0);
  CHECK(s2 == 0);
  bool nonzero = ce[0] != 0 || ce[1] != 0 || ce[2] != 0;
  CHECK(nonzero);

  // singletons always detect
  CHECK(verify_detecting_family(3, 2, {{1}, {2}, {3}}));
  CHECK(verify_detecting_family(4, 4, {{1}, {2}, {3}, {4}}));
  // missing an element of the universe fails for d >= 2
  CHECK_FALSE(verify_detecting_family(3, 2, {{1}, {2}}));
  // d = 1: a single function, trivially detecting
  CHECK(verify_detecting_family(3, 1, {}));
}
