#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degbound/bdvd_dp.hpp"
#include "degbound/oracle.hpp"
#include "degbound/util.hpp"

using namespace degbound;

namespace {

NiceTreeDecomposition nice_for(const Graph& g,
                               EliminationHeuristic h = EliminationHeuristic::min_fill) {
  return to_nice(heuristic_decomposition(g, h), g);
}

Graph random_graph(Rng& rng, int n, int percent) {
  std::vector<Graph::Edge> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (rng.below(100) < static_cast<std::uint64_t>(percent)) edges.push_back({u, v});
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("pinned small instances") {
  Graph p3(3, {{1, 2}, {2, 3}});
  CHECK(bdvd_min(p3, nice_for(p3), 0) == 1);
  CHECK(bdvd_min(p3, nice_for(p3), 1) == 1);
  CHECK(bdvd_min(p3, nice_for(p3), 2) == 0);

  Graph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  int oracle_k = static_cast<int>(bdvd_min_bruteforce(c4, 1).size());
  CHECK(bdvd_min(c4, nice_for(c4), 1) == oracle_k);
  CHECK(oracle_k == 2);  // removing one vertex leaves a path with a degree-2 middle

  for (int delta = 0; delta <= 3; ++delta) {
    std::vector<Graph::Edge> edges;
    for (Vertex leaf = 2; leaf <= delta + 2; ++leaf) edges.push_back({1, leaf});
    Graph star(delta + 2, edges);  // center has degree delta+1
    CHECK(bdvd_min(star, nice_for(star), delta) == 1);
  }
}

TEST_CASE("witness for the P3 decision example") {
  Graph p3(3, {{1, 2}, {2, 3}});
  VertexSet witness;
  CHECK(bdvd_decide(p3, nice_for(p3), 1, 1, &witness));
  CHECK(witness.size() == 1);
  std::string why;
  CHECK(verify_deletion_set(p3, witness, 1, &why));
  CHECK_FALSE(bdvd_decide(p3, nice_for(p3), 0, 0));
}

TEST_CASE("join nodes in a branching decomposition") {
  Graph bow(5, {{1, 2}, {1, 5}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
  TreeDecomposition td;
  td.num_graph_vertices = 5;
  td.bags = {{5}, {1, 2, 5}, {3, 4, 5}};
  td.tree_edges = {{1, 2}, {1, 3}};
  REQUIRE(validate_decomposition(bow, td).empty());
  NiceTreeDecomposition ntd = to_nice(td, bow);
  bool has_join = false;
  for (const auto& nd : ntd.nodes) has_join |= nd.kind == NodeKind::Join;
  REQUIRE(has_join);
  for (int delta = 0; delta <= 3; ++delta) {
    int k = static_cast<int>(bdvd_min_bruteforce(bow, delta).size());
    BdvdResult r = bdvd_solve(bow, ntd, delta);
    REQUIRE(r.k_min.has_value());
    CHECK(*r.k_min == k);
    REQUIRE(r.witness.has_value());
    CHECK(static_cast<int>(r.witness->size()) == k);
    CHECK(verify_deletion_set(bow, *r.witness, delta, nullptr));
  }
}

TEST_CASE("random graphs match the oracle, witnesses verify, budgets decide") {
  Rng rng(424242);
  int last_k = -1;
  for (int round = 0; round < 60; ++round) {
    int n = 3 + static_cast<int>(rng.below(8));
    Graph g = random_graph(rng, n, 20 + static_cast<int>(rng.below(60)));
    NiceTreeDecomposition ntd = nice_for(g);
    int prev = n + 1;
    for (int delta = 0; delta <= 3; ++delta) {
      int k = static_cast<int>(bdvd_min_bruteforce(g, delta).size());
      CAPTURE(round);
      CAPTURE(delta);
      BdvdResult r = bdvd_solve(g, ntd, delta);
      REQUIRE(r.k_min.has_value());
      CHECK(*r.k_min == k);
      REQUIRE(r.witness.has_value());
      CHECK(static_cast<int>(r.witness->size()) == k);
      std::string why;
      CHECK(verify_deletion_set(g, *r.witness, delta, &why));
      INFO(why);
      // monotone: allowing higher residual degree never needs more deletions
      CHECK(k <= prev);
      prev = k;
      // decision mode around the optimum
      CHECK(bdvd_decide(g, ntd, delta, k));
      if (k > 0) CHECK_FALSE(bdvd_decide(g, ntd, delta, k - 1));
      // decomposition invariance via the other heuristic
      CHECK(bdvd_min(g, nice_for(g, EliminationHeuristic::min_degree), delta) == k);
      last_k = k;
    }
  }
  CHECK(last_k >= 0);
}

TEST_CASE("tables stay within the state-space bound") {
  Graph p6(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  NiceTreeDecomposition ntd = nice_for(p6);
  int delta = 1;
  BdvdOptions opts;
  opts.want_witness = false;
  BdvdResult r = bdvd_solve(p6, ntd, delta, opts);
  std::size_t bound = 1;
  for (int i = 0; i <= ntd.width(); ++i) bound *= static_cast<std::size_t>(delta + 2);
  CHECK(r.peak_table_entries <= bound);
  REQUIRE(r.k_min.has_value());
  CHECK(*r.k_min == static_cast<int>(bdvd_min_bruteforce(p6, delta).size()));
}

TEST_CASE("input validation") {
  Graph loop(2, {{1, 1}, {1, 2}});
  NiceTreeDecomposition ntd;
  CHECK_THROWS_AS(bdvd_solve(loop, ntd, 1), Error);
  Graph ok(2, {{1, 2}});
  CHECK_THROWS_AS(bdvd_solve(ok, nice_for(ok), -1), Error);
  BdvdOptions opts;
  opts.budget = -3;
  CHECK_THROWS_AS(bdvd_solve(ok, nice_for(ok), 1, opts), Error);
}
