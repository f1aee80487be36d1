#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "degbound/gadgets.hpp"
#include "degbound/graph.hpp"
#include "degbound/util.hpp"

using namespace degbound;

namespace {

template <typename Fn>
Errc thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::io_error;  // sentinel: nothing thrown
}

int count_edges_at(const Gadget& g, int slot) {
  int n = 0;
  for (const auto& [a, b] : g.edges) n += (a == slot) + (b == slot);
  return n;
}

}  // namespace

TEST_CASE("reference equality and palette fragments") {
  Gadget q = equality_gadget(2, 1);
  CHECK(q.tag == ContractTag::equality);
  CHECK(q.attachments == 2);
  CHECK(q.palette_endpoints == 0);
  CHECK(q.internals == 3);  // 2*delta+1 connectors
  CHECK(q.edges.size() == 6);
  CHECK(q.bags.size() == 3);
  CHECK(q.width_bound() == 3);
  for (int w = 1; w <= 3; ++w) {
    CHECK(count_edges_at(q, w) == 2);
  }
  CHECK(count_edges_at(q, -1) == 3);
  CHECK(count_edges_at(q, -2) == 3);
  std::string why;
  CHECK(gadget_bags_valid(q, &why));

  CHECK(equality_gadget(2, 2).internals == 5);
  CHECK(equality_gadget(2, 3).internals == 7);

  Gadget p = palette_gadget(2, 1);
  CHECK(p.tag == ContractTag::palette);
  CHECK(p.attachments == 3);
  CHECK(p.internals == 0);
  CHECK(p.edges.empty());
  CHECK(p.bags.empty());
  CHECK(p.width_bound() == 3);
  CHECK(gadget_bags_valid(p, &why));

  CHECK(thrown_code([] { equality_gadget(1, 1); }) == Errc::invalid_argument);
  CHECK(thrown_code([] { equality_gadget(2, -1); }) == Errc::invalid_argument);
  CHECK(thrown_code([] { equality_gadget(3, 1); }) == Errc::not_implemented);   // reference is chi=2 only
  CHECK(thrown_code([] { equality_gadget(2, 0); }) == Errc::not_implemented);   // reference needs delta >= 1
  CHECK(thrown_code([] { palette_gadget(3, 1); }) == Errc::not_implemented);
}

TEST_CASE("difference gadget composition") {
  Gadget d = difference_gadget(2, 1, 2);
  CHECK(d.tag == ContractTag::difference);
  CHECK(d.k == 2);
  CHECK(d.internals == 8);          // 2 leaves + 2 * 3 connectors
  CHECK(d.edges.size() == 14);      // 2 leaf edges + 2 * 6 connector edges
  CHECK(count_edges_at(d, -2) == 2);  // u2 sees only the leaves
  CHECK(count_edges_at(d, -1) == 6);  // u1 sees every connector
  CHECK(d.bags.size() == 6);          // {leaf, connector} per connector
  CHECK(d.width_bound() == 4);
  std::string why;
  CHECK(gadget_bags_valid(d, &why));

  Gadget bare = difference_gadget(2, 1, 0);
  CHECK(bare.internals == 0);
  CHECK(bare.edges.empty());
  CHECK(gadget_bags_valid(bare, &why));

  CHECK(difference_gadget(2, 2, 3).internals == 3 + 3 * 5);
  CHECK(thrown_code([] { difference_gadget(2, 1, -1); }) == Errc::invalid_argument);
}

TEST_CASE("exclusion and implication structure") {
  // Same palette color on both sides: v1 - a - v2 core with Q(u1,v1),
  // Q(u2,v2), Q(c1,a) and a (delta-1)-fold difference gadget on a.
  Gadget e11 = exclusion_gadget(2, 1, 1, 1);
  CHECK(e11.attachments == 2);
  CHECK(e11.palette_endpoints == 2);
  CHECK(e11.c1 == 1);
  CHECK(e11.c2 == 1);
  CHECK(e11.internals == 12);   // v1, v2, a + three 3-connector equality gadgets; D(...,0) is empty
  CHECK(e11.edges.size() == 20);
  CHECK(e11.width_bound() == 6);
  std::string why;
  CHECK(gadget_bags_valid(e11, &why));

  // Distinct palette colors at chi=2: the second side becomes D(u2,v2,delta+1).
  Gadget e12 = exclusion_gadget(2, 1, 1, 2);
  CHECK(e12.internals == 17);   // 12 - Q(u2,v2) + (2 leaves + 2 * 3 connectors)
  CHECK(e12.edges.size() == 28);
  CHECK(e12.width_bound() == 7);  // {v2, leaf, connector} bags plus 4 endpoints
  CHECK(gadget_bags_valid(e12, &why));

  Gadget e22 = exclusion_gadget(2, 2, 1, 2);
  CHECK(e22.internals == 3 + 5 + 5 + (1 + 5) + (3 + 3 * 5));  // core + Q + Q + D(1) + D(3)
  CHECK(gadget_bags_valid(e22, &why));

  CHECK(thrown_code([] { exclusion_gadget(2, 0, 1, 2); }) == Errc::invalid_argument);
  CHECK(thrown_code([] { exclusion_gadget(2, 1, 0, 2); }) == Errc::invalid_argument);
  CHECK(thrown_code([] { exclusion_gadget(2, 1, 1, 3); }) == Errc::invalid_argument);
  CHECK(thrown_code([] { exclusion_gadget(3, 1, 1, 2); }) == Errc::not_implemented);

  // chi=2 implication is exactly one exclusion subgadget (|C \ {c2}| = 1).
  Gadget i12 = implication_gadget(2, 1, 1, 2);  // built from E(c1=1, ck=1)
  CHECK(i12.tag == ContractTag::implication);
  CHECK(i12.internals == e11.internals);
  CHECK(i12.edges.size() == e11.edges.size());
  CHECK(i12.bags.size() == e11.bags.size());
  CHECK(gadget_bags_valid(i12, &why));

  Gadget i21 = implication_gadget(2, 1, 2, 1);  // built from E(c1=2, ck=2)
  CHECK(i21.internals == 12);
  CHECK(gadget_bags_valid(i21, &why));

  CHECK(thrown_code([] { implication_gadget(2, 0, 1, 2); }) == Errc::invalid_argument);
}

TEST_CASE("splice_into identifies endpoints and appends internals") {
  Graph p3(3, {{1, 2}, {2, 3}});
  Gadget q = equality_gadget(2, 1);
  std::vector<Vertex> internals;
  Graph spliced = splice_into(p3, q, {1, 3}, &internals);
  CHECK(spliced.num_vertices() == 6);
  CHECK(spliced.num_edges() == 8);
  CHECK(internals == VertexSet{4, 5, 6});
  for (Vertex w : internals) {
    CHECK(spliced.adjacent(w, 1));
    CHECK(spliced.adjacent(w, 3));
    CHECK_FALSE(spliced.adjacent(w, 2));
  }
  CHECK(thrown_code([&] { splice_into(p3, q, {1, 1}); }) == Errc::invalid_argument);
  CHECK(thrown_code([&] { splice_into(p3, q, {1}); }) == Errc::invalid_argument);
  CHECK(thrown_code([&] { splice_into(p3, q, {1, 4}); }) == Errc::vertex_out_of_range);

  // Gadget edges falling onto existing host edges are merged, not duplicated.
  Gadget with_core = q;
  with_core.edges.emplace_back(-1, -2);
  Graph k2(2, {{1, 2}});
  Graph merged = splice_into(k2, with_core, {1, 2});
  CHECK(merged.num_edges() == 7);  // 1 host edge (shared) + 6 connector edges
}

TEST_CASE("all small host graphs") {
  auto hosts3 = all_graphs_up_to(3);
  CHECK(hosts3.size() == 11);  // 1 + 2 + 8
  auto hosts4 = all_graphs_up_to(4);
  CHECK(hosts4.size() == 75);  // ... + 64
  CHECK(hosts4.back().num_vertices() == 4);
  CHECK(hosts4.back().num_edges() == 6);  // the complete graph comes last
}

TEST_CASE("contracts hold for every reference family") {
  auto hosts = all_graphs_up_to(4);
  std::string why;
  CHECK(verify_gadget_contract(equality_gadget(2, 1), 2, 1, hosts, &why));
  INFO(why);
  CHECK(verify_gadget_contract(equality_gadget(2, 2), 2, 2, hosts, &why));
  CHECK(verify_gadget_contract(palette_gadget(2, 1), 2, 1, hosts, &why));
  CHECK(verify_gadget_contract(palette_gadget(2, 2), 2, 2, hosts, &why));
  CHECK(verify_gadget_contract(difference_gadget(2, 1, 0), 2, 1, hosts, &why));
  CHECK(verify_gadget_contract(difference_gadget(2, 1, 1), 2, 1, hosts, &why));  // k = delta: exact contribution
  CHECK(verify_gadget_contract(difference_gadget(2, 1, 2), 2, 1, hosts, &why));  // k = delta+1: forces distinct
  CHECK(verify_gadget_contract(difference_gadget(2, 2, 3), 2, 2, hosts, &why));
  CHECK(verify_gadget_contract(exclusion_gadget(2, 1, 1, 1), 2, 1, hosts, &why));
  CHECK(verify_gadget_contract(exclusion_gadget(2, 1, 1, 2), 2, 1, hosts, &why));
  CHECK(verify_gadget_contract(exclusion_gadget(2, 1, 2, 1), 2, 1, hosts, &why));
  CHECK(verify_gadget_contract(implication_gadget(2, 1, 1, 2), 2, 1, hosts, &why));
  CHECK(verify_gadget_contract(implication_gadget(2, 1, 1, 1), 2, 1, hosts, &why));
  CHECK(why.empty());
}

TEST_CASE("broken gadgets are rejected") {
  auto hosts = all_graphs_up_to(4);
  std::string why;

  // One connector short of 2*delta+1: a distinct-colored host pair survives.
  Gadget thin;
  thin.tag = ContractTag::equality;
  thin.chi = 2;
  thin.delta = 1;
  thin.attachments = 2;
  thin.internals = 2;
  thin.edges = {{-1, 1}, {-2, 1}, {-1, 2}, {-2, 2}};
  thin.bags = {{1}, {2}};
  CHECK(gadget_bags_valid(thin, &why));
  CHECK_FALSE(verify_gadget_contract(thin, 2, 1, hosts, &why));
  CHECK(why.find("forcing") != std::string::npos);

  // The empty palette gadget is only sound for two colors.
  Gadget empty_palette;
  empty_palette.tag = ContractTag::palette;
  empty_palette.chi = 3;
  empty_palette.delta = 1;
  empty_palette.attachments = 3;
  CHECK_FALSE(verify_gadget_contract(empty_palette, 3, 1, hosts, &why));
  CHECK(why.find("forcing") != std::string::npos);
  CHECK(verify_gadget_contract(empty_palette, 2, 1, hosts, &why));  // pigeonhole holds at chi=2

  // A mislabeled exclusion: structure excludes palette color 1, tag claims 2.
  Gadget mislabeled = exclusion_gadget(2, 1, 1, 1);
  mislabeled.c2 = 2;
  CHECK_FALSE(verify_gadget_contract(mislabeled, 2, 1, hosts, &why));
  CHECK(why.find("violated") != std::string::npos);

  // Wrong declared multiplicity: the fragment contributes 1, the tag says 2.
  Gadget off_by_one = difference_gadget(2, 1, 1);
  off_by_one.k = 2;
  CHECK_FALSE(verify_gadget_contract(off_by_one, 2, 1, hosts, &why));

  // An equality gadget that links its endpoints directly is not neutral.
  Gadget direct = equality_gadget(2, 1);
  direct.edges.emplace_back(-1, -2);
  CHECK_FALSE(verify_gadget_contract(direct, 2, 1, hosts, &why));
  CHECK(why.find("extension") != std::string::npos);

  // Layout mismatches are rejected before any search.
  CHECK_FALSE(verify_gadget_contract(exclusion_gadget(2, 1, 1, 2), 3, 1, hosts, &why));
  CHECK(why.find("layout") != std::string::npos);
}

TEST_CASE("equality gadgets compose transitively") {
  // u -Q- v -Q- w forces c(u) = c(w) in every valid coloring of every host.
  Gadget q = equality_gadget(2, 1);
  for (const Graph& host : all_graphs_up_to(3)) {
    if (host.num_vertices() < 3) continue;
    Graph once = splice_into(host, q, {1, 2});
    Graph twice = splice_into(once, q, {2, 3});
    const int n = twice.num_vertices();
    bool any_valid = false;
    std::vector<int> phi(static_cast<std::size_t>(n), 1);
    bool more = true;
    while (more) {
      if (verify_coloring(twice, phi, 2, 1)) {
        any_valid = true;
        CHECK(phi[0] == phi[2]);
        CHECK(phi[0] == phi[1]);
      }
      more = false;
      for (std::size_t d = 0; d < phi.size(); ++d) {
        if (phi[d] < 2) {
          ++phi[d];
          std::fill(phi.begin(), phi.begin() + static_cast<std::ptrdiff_t>(d), 1);
          more = true;
          break;
        }
      }
    }
    if (host.num_edges() == 0) CHECK(any_valid);  // sanity: the chain itself is colorable
  }
}

namespace {

// Splices `g` onto isolated host vertices colored `ecol`, completes the
// interior, and returns the same-colored neighbor count each endpoint gained,
// after checking the combined coloring is valid.
std::vector<int> spliced_additions(const Gadget& g, const std::vector<int>& ecol) {
  const int total = g.total_endpoints();
  Graph host(total, {});
  std::vector<Vertex> endpoints;
  for (int v = 1; v <= total; ++v) endpoints.push_back(v);
  std::vector<Vertex> internals;
  Graph spliced = splice_into(host, g, endpoints, &internals);
  std::vector<int> interior = complete_gadget_interior(g, ecol);
  REQUIRE(interior.size() == static_cast<std::size_t>(g.internals));
  Coloring coloring(static_cast<std::size_t>(spliced.num_vertices()), 0);
  for (int e = 0; e < total; ++e) coloring[static_cast<std::size_t>(e)] = ecol[static_cast<std::size_t>(e)];
  for (int i = 0; i < g.internals; ++i)
    coloring[static_cast<std::size_t>(internals[static_cast<std::size_t>(i)]) - 1] =
        interior[static_cast<std::size_t>(i)];
  std::string why;
  REQUIRE_MESSAGE(verify_coloring(spliced, coloring, g.chi, g.delta, &why), why);
  std::vector<int> adds(static_cast<std::size_t>(total), 0);
  for (int e = 1; e <= total; ++e)
    for (Vertex u : spliced.neighbors(e))
      if (coloring[static_cast<std::size_t>(u) - 1] == coloring[static_cast<std::size_t>(e) - 1])
        ++adds[static_cast<std::size_t>(e) - 1];
  return adds;
}

}  // namespace

TEST_CASE("interior completion per family") {
  for (int delta = 1; delta <= 2; ++delta) {
    Gadget q = equality_gadget(2, delta);
    for (int c = 1; c <= 2; ++c)
      CHECK(spliced_additions(q, {c, c}) == std::vector<int>{0, 0});
    CHECK(thrown_code([&] { complete_gadget_interior(q, {1, 2}); }) == Errc::contract_violation);

    // Low multiplicity: equal endpoints are allowed and u2 gains exactly k.
    for (int k = 0; k <= delta; ++k) {
      Gadget d = difference_gadget(2, delta, k);
      CHECK(spliced_additions(d, {1, 1}) == std::vector<int>{0, k});
      CHECK(spliced_additions(d, {1, 2}) == std::vector<int>{0, 0});
    }
    // Saturating multiplicity: equal endpoints violate the contract.
    Gadget forced = difference_gadget(2, delta, delta + 1);
    CHECK(spliced_additions(forced, {2, 1}) == std::vector<int>{0, 0});
    CHECK(thrown_code([&] { complete_gadget_interior(forced, {1, 1}); }) == Errc::contract_violation);

    for (int c1 = 1; c1 <= 2; ++c1)
      for (int c2 = 1; c2 <= 2; ++c2) {
        Gadget e = exclusion_gadget(2, delta, c1, c2);
        Gadget i = implication_gadget(2, delta, c1, c2);
        for (int u1 = 1; u1 <= 2; ++u1)
          for (int u2 = 1; u2 <= 2; ++u2) {
            std::vector<int> ecol = {u1, u2, 1, 2};  // palette endpoints carry their own colors
            if (u1 == c1 && u2 == c2) {
              CHECK(thrown_code([&] { complete_gadget_interior(e, ecol); }) == Errc::contract_violation);
            } else {
              CHECK(spliced_additions(e, ecol) == std::vector<int>{0, 0, 0, 0});
            }
            bool implication_holds = (u1 != c1) || (u2 == c2);
            if (implication_holds) {
              CHECK(spliced_additions(i, ecol) == std::vector<int>{0, 0, 0, 0});
            } else {
              CHECK(thrown_code([&] { complete_gadget_interior(i, ecol); }) == Errc::contract_violation);
            }
          }
      }
  }
  CHECK(complete_gadget_interior(palette_gadget(2, 1), {1, 1, 2}).empty());
  CHECK(thrown_code([] { complete_gadget_interior(equality_gadget(2, 1), {1}); }) == Errc::invalid_argument);
  CHECK(thrown_code([] { complete_gadget_interior(equality_gadget(2, 1), {1, 3}); }) == Errc::invalid_argument);
}

TEST_CASE("bag recipe validation catches broken recipes") {
  std::string why;
  Gadget q = equality_gadget(2, 1);
  q.bags.pop_back();  // connector 3 no longer appears in any bag
  CHECK_FALSE(gadget_bags_valid(q, &why));
  CHECK_FALSE(why.empty());

  Gadget loopy = equality_gadget(2, 1);
  loopy.edges.emplace_back(1, 1);
  CHECK_FALSE(gadget_bags_valid(loopy, &why));

  Gadget dup = equality_gadget(2, 1);
  dup.edges.emplace_back(-1, 1);
  CHECK_FALSE(gadget_bags_valid(dup, &why));

  Gadget stray = equality_gadget(2, 1);
  stray.bags.push_back({9});
  CHECK_FALSE(gadget_bags_valid(stray, &why));
}
