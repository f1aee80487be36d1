#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "degbound/bdvd_dp.hpp"
#include "degbound/csp.hpp"
#include "degbound/dc_dp.hpp"
#include "degbound/decomp.hpp"
#include "degbound/graph.hpp"
#include "degbound/oracle.hpp"
#include "degbound/reductions.hpp"
#include "degbound/util.hpp"
#include "degbound/xsat.hpp"

using namespace degbound;

namespace {

template <typename Fn>
Errc thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::io_error;  // sentinel: nothing was thrown
}

long long meta(const ReductionBundle& bundle, const std::string& key) {
  auto it = bundle.metadata.find(key);
  REQUIRE(it != bundle.metadata.end());
  return std::stoll(it->second);
}

CspInstance make_csp(int num_vars, int arity, int domain,
                     std::vector<std::pair<std::vector<int>, std::vector<std::vector<int>>>> raw) {
  std::vector<CspConstraint> constraints;
  for (auto& [scope, sat] : raw) constraints.push_back(CspConstraint{scope, sat});
  return CspInstance(num_vars, arity, domain, constraints);
}

// Decides the generated instance with the DP over the emitted path witness.
bool bundle_yes(const ReductionBundle& bundle) {
  REQUIRE(bundle.path_witness.has_value());
  NiceTreeDecomposition nice = to_nice(*bundle.path_witness, bundle.graph);
  if (bundle.problem == ProblemKind::bdvd)
    return bdvd_decide(bundle.graph, nice, bundle.delta, static_cast<int>(bundle.budget));
  return dc_decide(bundle.graph, nice, bundle.chi, bundle.delta);
}

void check_path_witness(const ReductionBundle& bundle, int source_vars, int arity, int domain) {
  REQUIRE(bundle.path_witness.has_value());
  const TreeDecomposition& td = *bundle.path_witness;
  CHECK(td.is_path);
  CHECK(validate_decomposition(bundle.graph, td).empty());
  long long tuples = 1;
  for (int i = 0; i < arity; ++i) tuples *= domain;
  CHECK(td.width() <= source_vars + 2 * tuples + 3);
}

int same_colored_neighbors(const Graph& g, const Coloring& col, Vertex v) {
  int count = 0;
  for (Vertex w : g.neighbors(v))
    if (col[static_cast<std::size_t>(w) - 1] == col[static_cast<std::size_t>(v) - 1]) ++count;
  return count;
}

bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
  std::vector<bool> in(static_cast<std::size_t>(g.num_vertices()) + 1, false);
  for (Vertex v : cover) in[static_cast<std::size_t>(v)] = true;
  for (const auto& [u, v] : g.edges())
    if (!in[static_cast<std::size_t>(u)] && !in[static_cast<std::size_t>(v)]) return false;
  return true;
}

// Multicolored-clique instance on k parts of size n: self-loops everywhere
// plus the given cross edges (1-based part/position coordinates).
Graph make_mcc(int k, int n, const std::vector<std::array<int, 4>>& cross) {
  std::vector<Graph::Edge> edges;
  for (int v = 1; v <= k * n; ++v) edges.push_back({v, v});
  for (const auto& [i1, j1, i2, j2] : cross)
    edges.push_back({(i1 - 1) * n + j1, (i2 - 1) * n + j2});
  return Graph(k * n, edges);
}

Graph complete_mcc(int k, int n) {
  std::vector<std::array<int, 4>> cross;
  for (int i1 = 1; i1 <= k; ++i1)
    for (int i2 = i1 + 1; i2 <= k; ++i2)
      for (int j1 = 1; j1 <= n; ++j1)
        for (int j2 = 1; j2 <= n; ++j2) cross.push_back({i1, j1, i2, j2});
  return make_mcc(k, n, cross);
}

void check_forest_witness(const ReductionBundle& bundle, int parts) {
  REQUIRE(bundle.forest_witness.has_value());
  const EliminationForest& forest = *bundle.forest_witness;
  CHECK(validate_forest(bundle.graph, forest).empty());
  CHECK(forest.depth() <= 16 * parts + 8);
  TreeDecomposition td = forest_to_decomposition(forest, bundle.graph);
  CHECK(validate_decomposition(bundle.graph, td).empty());
  CHECK(td.width() <= forest.depth() - 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// Pathwidth generators, degree bound 1
// ---------------------------------------------------------------------------

TEST_CASE("deletion pathwidth generator at degree bound 1 matches the worked example") {
  CspInstance csp = make_csp(1, 1, 3, {{{1}, {{2}}}});
  ReductionBundle bundle = bdvd_pw_delta1(csp);

  CHECK(bundle.problem == ProblemKind::bdvd);
  CHECK(bundle.generator == "bdvd-pw-d1");
  CHECK(bundle.delta == 1);
  CHECK(meta(bundle, "kprime") == 1);
  CHECK(meta(bundle, "kappa") == 3);
  CHECK(bundle.budget == 3);
  CHECK(bundle.graph.num_vertices() == 15);
  CHECK(meta(bundle, "vertices") == 15);
  check_path_witness(bundle, 1, 1, 3);

  auto assignment = csp_bruteforce(csp);
  REQUIRE(assignment.has_value());
  CHECK(*assignment == std::vector<int>{2});
  VertexSet s = bundle.forward_deletion(*assignment);
  CHECK(static_cast<long long>(s.size()) == bundle.budget);
  std::string why;
  CHECK(verify_deletion_set(bundle.graph, s, bundle.delta, &why));
  CHECK(why.empty());

  // Deterministic regeneration.
  ReductionBundle again = bdvd_pw_delta1(csp);
  CHECK(emit_gr(again.graph) == emit_gr(bundle.graph));
  CHECK(emit_td(*again.path_witness) == emit_td(*bundle.path_witness));
}

TEST_CASE("deletion pathwidth bundle at degree bound 1 decides satisfiability") {
  CspInstance sat = make_csp(1, 1, 3, {{{1}, {{2}}}});
  ReductionBundle yes = bdvd_pw_delta1(sat);
  NiceTreeDecomposition nice = to_nice(*yes.path_witness, yes.graph);
  CHECK(bdvd_min(yes.graph, nice, 1) == yes.budget);
  CHECK(bundle_yes(yes));

  // x1 must be simultaneously 1 and 2: unsatisfiable.
  CspInstance unsat = make_csp(1, 1, 3, {{{1}, {{1}}}, {{1}, {{2}}}});
  CHECK(!csp_bruteforce(unsat).has_value());
  ReductionBundle no = bdvd_pw_delta1(unsat);
  NiceTreeDecomposition nice_no = to_nice(*no.path_witness, no.graph);
  CHECK(bdvd_min(no.graph, nice_no, 1) > no.budget);
  CHECK(!bundle_yes(no));
}

// ---------------------------------------------------------------------------
// Pathwidth generators, larger domains
// ---------------------------------------------------------------------------

TEST_CASE("deletion pathwidth generator at larger domains matches the counting formulas") {
  CspInstance csp = make_csp(1, 1, 4, {{{1}, {{4}}}});
  ReductionBundle bundle = bdvd_pw_general(csp);

  CHECK(bundle.generator == "bdvd-pw");
  CHECK(bundle.delta == 2);
  CHECK(meta(bundle, "kappa1") == 2);
  CHECK(meta(bundle, "kappa2") == 6);
  CHECK(meta(bundle, "kappa") == 12);
  CHECK(meta(bundle, "k_c") == 3);
  CHECK(bundle.budget == 37);

  // chain (m*kappa + 1) + blocks kappa*m*n*(delta^2 + 3*delta + 1)
  // + cliques kappa*sum(s*(delta+1)): each clique vertex carries delta leaves.
  const int delta = bundle.delta;
  const int block = delta * delta + 3 * delta + 1;
  CHECK(bundle.graph.num_vertices() == (12 + 1) + 12 * block + 12 * (delta + 1));
  check_path_witness(bundle, 1, 1, 4);

  // Satisfying value 4 is the chain-deletion case: exactly the full budget.
  VertexSet s_full = bundle.forward_deletion({4});
  CHECK(static_cast<long long>(s_full.size()) == bundle.budget);
  CHECK(verify_deletion_set(bundle.graph, s_full, delta));

  // A non-maximal value deletes one vertex fewer (no chain deletion).
  CspInstance csp2 = make_csp(1, 1, 4, {{{1}, {{2}}}});
  ReductionBundle bundle2 = bdvd_pw_general(csp2);
  VertexSet s_two = bundle2.forward_deletion({2});
  CHECK(static_cast<long long>(s_two.size()) == bundle2.budget - 1);
  CHECK(verify_deletion_set(bundle2.graph, s_two, delta));

  CHECK(bundle_yes(bundle));
  CHECK(bundle_yes(bundle2));

  // Unsatisfiable source: solver needs more than the budget.
  CspInstance unsat = make_csp(1, 1, 4, {{{1}, {{1}}}, {{1}, {{2}}}});
  CHECK(!bundle_yes(bdvd_pw_general(unsat)));
}

TEST_CASE("coloring pathwidth generator at defect 1 matches the worked example") {
  // chi = 2, B = 2*chi = 4, one unary constraint.
  CspInstance csp = make_csp(1, 1, 4, {{{1}, {{2}}}});
  ReductionBundle bundle = dc_pw_delta1(csp, 2);

  CHECK(bundle.problem == ProblemKind::dc);
  CHECK(bundle.generator == "dc-pw-d1");
  CHECK(bundle.chi == 2);
  CHECK(bundle.delta == 1);
  CHECK(meta(bundle, "kappa") == 2);
  check_path_witness(bundle, 1, 1, 4);

  auto assignment = csp_bruteforce(csp);
  REQUIRE(assignment.has_value());
  Coloring col = bundle.forward_coloring(*assignment);
  std::string why;
  CHECK(verify_coloring(bundle.graph, col, 2, 1, &why));
  CHECK(why.empty());
  CHECK(bundle_yes(bundle));

  CspInstance unsat = make_csp(1, 1, 4, {{{1}, {{1}}}, {{1}, {{2}}}});
  CHECK(!bundle_yes(dc_pw_delta1(unsat, 2)));

  ReductionBundle again = dc_pw_delta1(csp, 2);
  CHECK(emit_gr(again.graph) == emit_gr(bundle.graph));
}

TEST_CASE("coloring pathwidth generator at larger defects matches the worked example") {
  // chi = 2, delta = 2, B = chi*(delta+1) = 6.
  CspInstance csp = make_csp(1, 1, 6, {{{1}, {{5}}}});
  ReductionBundle bundle = dc_pw_general(csp, 2, 2);

  CHECK(bundle.generator == "dc-pw");
  CHECK(bundle.chi == 2);
  CHECK(bundle.delta == 2);
  CHECK(meta(bundle, "kappa") == 3);
  check_path_witness(bundle, 1, 1, 6);

  Coloring col = bundle.forward_coloring({5});
  std::string why;
  CHECK(verify_coloring(bundle.graph, col, 2, 2, &why));
  CHECK(why.empty());
  CHECK(bundle_yes(bundle));

  CspInstance unsat = make_csp(1, 1, 6, {{{1}, {{1}}}, {{1}, {{2}}}});
  CHECK(!bundle_yes(dc_pw_general(unsat, 2, 2)));
}

TEST_CASE("pathwidth biconditional holds on random desk-scale sources") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    CspInstance b3 = random_csp(2, 2, 2, 3, 0.4, seed);
    CHECK(bundle_yes(bdvd_pw_delta1(b3)) == csp_bruteforce(b3).has_value());
    CspInstance b4 = random_csp(2, 2, 2, 4, 0.4, seed);
    CHECK(bundle_yes(bdvd_pw_general(b4)) == csp_bruteforce(b4).has_value());
    CHECK(bundle_yes(dc_pw_delta1(b4, 2)) == csp_bruteforce(b4).has_value());
    CspInstance b6 = random_csp(2, 2, 2, 6, 0.3, seed);
    CHECK(bundle_yes(dc_pw_general(b6, 2, 2)) == csp_bruteforce(b6).has_value());
    ++checked;
  }
  CHECK(checked == 6);
}

TEST_CASE("pathwidth generators validate their sources") {
  CspInstance b4 = make_csp(1, 1, 4, {{{1}, {{1}}}});
  CspInstance b3 = make_csp(1, 1, 3, {{{1}, {{1}}}});
  CspInstance b6 = make_csp(1, 1, 6, {{{1}, {{1}}}});

  CHECK(thrown_code([&] { bdvd_pw_delta1(b4); }) == Errc::invalid_argument);
  CHECK(thrown_code([&] { bdvd_pw_general(b3); }) == Errc::invalid_argument);
  CHECK(thrown_code([&] { dc_pw_delta1(b3, 2); }) == Errc::invalid_argument);
  CHECK(thrown_code([&] { dc_pw_delta1(b4, 1); }) == Errc::invalid_argument);
  CHECK(thrown_code([&] { dc_pw_general(b6, 2, 1); }) == Errc::invalid_argument);
  CHECK(thrown_code([&] { dc_pw_general(b4, 2, 2); }) == Errc::invalid_argument);

  // No constraints: the sweep schedule would be vacuous.
  CspInstance empty(1, 1, 3, {});
  CHECK(thrown_code([&] { bdvd_pw_delta1(empty); }) == Errc::invalid_argument);

  // The reference gadget provider covers two colors only.
  CspInstance b8 = make_csp(1, 1, 6, {{{1}, {{1}}}});
  CHECK(thrown_code([&] { dc_pw_delta1(b8, 3); }) == Errc::not_implemented);

  // Forward builders reject non-satisfying certificates.
  ReductionBundle bundle = bdvd_pw_delta1(make_csp(1, 1, 3, {{{1}, {{2}}}}));
  CHECK(thrown_code([&] { bundle.forward_deletion({1}); }) == Errc::invalid_argument);
  CHECK(thrown_code([&] { bundle.forward_deletion({1, 2}); }) == Errc::invalid_argument);
}

// ---------------------------------------------------------------------------
// Tree-depth generators
// ---------------------------------------------------------------------------

TEST_CASE("tree-depth deletion generator matches the worked example") {
  Graph mcc = complete_mcc(2, 2);
  ReductionBundle bundle = bdvd_td(mcc, 2);

  CHECK(bundle.generator == "bdvd-td");
  CHECK(bundle.delta == 8);  // part size cubed
  CHECK(meta(bundle, "beta") == 12);
  // Multiplicity: 4 cross edges twice + 4 loops once.
  CHECK(meta(bundle, "edge_instances") == 12);
  // budget = n*beta + 2n*instances + matched = 2*12 + 4*12 + 4.
  CHECK(bundle.budget == 76);
  check_forest_witness(bundle, 2);
  CHECK(bundle.forest_witness->depth() == 23);

  for (int j1 = 1; j1 <= 2; ++j1)
    for (int j2 = 1; j2 <= 2; ++j2) {
      VertexSet s = bundle.forward_deletion({j1, j2});
      CHECK(static_cast<long long>(s.size()) == bundle.budget);
      std::string why;
      CHECK(verify_deletion_set(bundle.graph, s, bundle.delta, &why));
      CHECK(why.empty());
    }

  ReductionBundle again = bdvd_td(mcc, 2);
  CHECK(emit_gr(again.graph) == emit_gr(bundle.graph));
  CHECK(emit_forest(*again.forest_witness) == emit_forest(*bundle.forest_witness));
}

TEST_CASE("tree-depth deletion generator scales to four parts") {
  std::vector<int> planted;
  Graph mcc = random_mcc_with_clique(4, 2, 1.0, 7, &planted);
  ReductionBundle bundle = bdvd_td(mcc, 4);
  CHECK(meta(bundle, "beta") == 2 * 4 * 7);
  check_forest_witness(bundle, 4);
  CHECK(bundle.forest_witness->depth() == 55);
  VertexSet s = bundle.forward_deletion(planted);
  CHECK(static_cast<long long>(s.size()) == bundle.budget);
  CHECK(verify_deletion_set(bundle.graph, s, bundle.delta));
}

TEST_CASE("tree-depth inputs are validated") {
  Graph mcc = complete_mcc(2, 2);
  CHECK(thrown_code([&] { bdvd_td(mcc, 3); }) == Errc::invalid_argument);

  // A vertex without a self-loop.
  Graph no_loop(4, {{1, 1}, {2, 2}, {3, 3}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(thrown_code([&] { bdvd_td(no_loop, 2); }) == Errc::invalid_argument);

  // An edge inside one part.
  Graph intra(4, {{1, 1}, {2, 2}, {3, 3}, {4, 4}, {1, 2}, {1, 3}, {2, 4}});
  CHECK(thrown_code([&] { bdvd_td(intra, 2); }) == Errc::invalid_argument);

  // Parts of size one are below the construction's base case.
  Graph tiny(2, {{1, 1}, {2, 2}, {1, 2}});
  CHECK(thrown_code([&] { bdvd_td(tiny, 2); }) == Errc::invalid_argument);

  // Certificates must be planted cliques.
  Graph partial = make_mcc(2, 2, {{1, 1, 2, 1}});
  ReductionBundle bundle = bdvd_td(partial, 2);
  CHECK(thrown_code([&] { bundle.forward_deletion({1, 2}); }) == Errc::invalid_argument);
  CHECK(thrown_code([&] { bundle.forward_deletion({1}); }) == Errc::invalid_argument);
  CHECK(thrown_code([&] { bundle.forward_deletion({1, 3}); }) == Errc::invalid_argument);
  VertexSet good = bundle.forward_deletion({1, 1});
  CHECK(verify_deletion_set(bundle.graph, good, bundle.delta));
}

TEST_CASE("tree-depth coloring generator matches the worked example") {
  Graph mcc = complete_mcc(2, 2);
  ReductionBundle bundle = dc_td(mcc, 2, 2);

  CHECK(bundle.generator == "dc-td");
  CHECK(bundle.chi == 2);
  // delta = 2(|E| - kn) + kn - k^2 = 2(8-4) + 4 - 4 = 8.
  CHECK(bundle.delta == 8);
  CHECK(meta(bundle, "defect") == 8);
  check_forest_witness(bundle, 2);
  CHECK(bundle.forest_witness->depth() == 27);

  Coloring col = bundle.forward_coloring({1, 2});
  std::string why;
  CHECK(verify_coloring(bundle.graph, col, 2, 8, &why));
  CHECK(why.empty());

  // The hub sees exactly delta same-colored neighbors under any certificate.
  Vertex u = static_cast<Vertex>(meta(bundle, "u_vertex"));
  CHECK(same_colored_neighbors(bundle.graph, col, u) == bundle.delta);
  Coloring col2 = bundle.forward_coloring({2, 1});
  CHECK(verify_coloring(bundle.graph, col2, 2, 8));
  CHECK(same_colored_neighbors(bundle.graph, col2, u) == bundle.delta);

  ReductionBundle again = dc_td(mcc, 2, 2);
  CHECK(emit_gr(again.graph) == emit_gr(bundle.graph));
}

TEST_CASE("tree-depth coloring generator scales to four parts") {
  std::vector<int> planted;
  Graph mcc = random_mcc_with_clique(4, 2, 0.0, 11, &planted);
  ReductionBundle bundle = dc_td(mcc, 4, 2);
  check_forest_witness(bundle, 4);
  CHECK(bundle.forest_witness->depth() == 59);
  Coloring col = bundle.forward_coloring(planted);
  CHECK(verify_coloring(bundle.graph, col, 2, bundle.delta));
  Vertex u = static_cast<Vertex>(meta(bundle, "u_vertex"));
  CHECK(same_colored_neighbors(bundle.graph, col, u) == bundle.delta);
}

TEST_CASE("tree-depth coloring generator rejects unsupported parameters") {
  // Planted clique only: 1 cross edge, defect bound 2(5-4)+4-4 = 2 < 4.
  Graph sparse = make_mcc(2, 2, {{1, 1, 2, 1}});
  CHECK(thrown_code([&] { dc_td(sparse, 2, 2); }) == Errc::invalid_argument);

  // Three colors need a palette fragment the reference provider lacks.
  Graph mcc = complete_mcc(2, 2);
  CHECK(thrown_code([&] { dc_td(mcc, 2, 3); }) == Errc::not_implemented);
  CHECK(thrown_code([&] { dc_td(mcc, 2, 1); }) == Errc::invalid_argument);
}

// ---------------------------------------------------------------------------
// Vertex-cover generators
// ---------------------------------------------------------------------------

TEST_CASE("vertex-cover deletion generator matches the size lemma") {
  XsatFormula f(3, {{1, 2, 3}});
  ReductionBundle bundle = bdvd_vc(f);

  CHECK(bundle.generator == "bdvd-vc");
  CHECK(meta(bundle, "padded_vars") == 4);
  CHECK(meta(bundle, "dummy_vars") == 1);
  CHECK(bundle.delta == 64);  // padded count cubed
  CHECK(bundle.budget == meta(bundle, "var_groups"));

  REQUIRE(bundle.cover_witness.has_value());
  const VertexSet& cover = *bundle.cover_witness;
  CHECK(is_vertex_cover(bundle.graph, cover));
  CHECK(static_cast<long long>(cover.size()) ==
        2 * meta(bundle, "var_groups") + 2 * meta(bundle, "family_sets"));
  CHECK(static_cast<long long>(cover.size()) == meta(bundle, "cover_size"));
  REQUIRE(bundle.forest_witness.has_value());
  CHECK(validate_forest(bundle.graph, *bundle.forest_witness).empty());
  CHECK(bundle.forest_witness->depth() == static_cast<int>(cover.size()) + 1);

  auto sat = xsat_bruteforce(f);
  REQUIRE(sat.has_value());
  std::vector<int> assignment;
  for (bool b : *sat) assignment.push_back(b ? 1 : 0);
  VertexSet s = bundle.forward_deletion(assignment);
  CHECK(static_cast<long long>(s.size()) == bundle.budget);
  std::string why;
  CHECK(verify_deletion_set(bundle.graph, s, bundle.delta, &why));
  CHECK(why.empty());

  ReductionBundle again = bdvd_vc(f);
  CHECK(emit_gr(again.graph) == emit_gr(bundle.graph));
}

TEST_CASE("vertex-cover deletion generator handles multi-clause padded sources") {
  XsatFormula f(5, {{1, 2, 3}, {-1, 4, 5}});
  ReductionBundle bundle = bdvd_vc(f);
  CHECK(meta(bundle, "padded_vars") == 16);
  CHECK(bundle.delta == 16 * 16 * 16);
  CHECK(is_vertex_cover(bundle.graph, *bundle.cover_witness));
  CHECK(validate_forest(bundle.graph, *bundle.forest_witness).empty());

  auto sat = xsat_bruteforce(f);
  REQUIRE(sat.has_value());
  std::vector<int> assignment;
  for (bool b : *sat) assignment.push_back(b ? 1 : 0);
  VertexSet s = bundle.forward_deletion(assignment);
  CHECK(static_cast<long long>(s.size()) == bundle.budget);
  CHECK(verify_deletion_set(bundle.graph, s, bundle.delta));
}

TEST_CASE("vertex-cover coloring generator matches the construction") {
  XsatFormula f(3, {{1, 2, 3}});
  ReductionBundle bundle = dc_vc(f, 2);

  CHECK(bundle.generator == "dc-vc");
  CHECK(meta(bundle, "padded_vars") == 16);
  CHECK(meta(bundle, "choice_vertices_per_group") == 2);
  const long long n_v = meta(bundle, "var_groups");
  const long long n_c = meta(bundle, "clause_groups");
  CHECK(n_v == 16);  // group size cap is 1 at 16 padded variables
  CHECK(n_c == 1);
  CHECK(bundle.delta == 17);  // n_V + n_C * n_F

  // The clause vertex meets exactly |C|*(3/2)*fourth-root(n) choice vertices,
  // and its partner meets the same ones.
  const long long delta = bundle.delta;
  const Vertex choice_base = static_cast<Vertex>(3 * delta + 2);
  const long long per_group = meta(bundle, "choice_vertices_per_group");
  auto is_choice = [&](Vertex v) {
    if (v <= choice_base) return false;
    long long offset = v - choice_base - 1;
    if (offset >= n_v * (per_group + 2)) return false;
    return offset % (per_group + 2) < per_group;
  };
  Vertex c = static_cast<Vertex>(meta(bundle, "first_clause_vertex"));
  REQUIRE(c > 0);
  Vertex cp = c + 1;
  std::vector<Vertex> c_choice, cp_choice;
  for (Vertex w : bundle.graph.neighbors(c))
    if (is_choice(w)) c_choice.push_back(w);
  for (Vertex w : bundle.graph.neighbors(cp))
    if (is_choice(w)) cp_choice.push_back(w);
  std::sort(c_choice.begin(), c_choice.end());
  std::sort(cp_choice.begin(), cp_choice.end());
  CHECK(static_cast<long long>(c_choice.size()) == 1 * 3 * 2 / 2);
  CHECK(c_choice == cp_choice);

  REQUIRE(bundle.cover_witness.has_value());
  CHECK(is_vertex_cover(bundle.graph, *bundle.cover_witness));
  CHECK(static_cast<long long>(bundle.cover_witness->size()) ==
        (delta + 1) + (2 * delta + 1) + 2 * n_v + 2 * meta(bundle, "family_sets"));
  CHECK(validate_forest(bundle.graph, *bundle.forest_witness).empty());
  CHECK(bundle.forest_witness->depth() ==
        static_cast<int>(bundle.cover_witness->size()) + 1);

  auto sat = xsat_bruteforce(f);
  REQUIRE(sat.has_value());
  std::vector<int> assignment;
  for (bool b : *sat) assignment.push_back(b ? 1 : 0);
  Coloring col = bundle.forward_coloring(assignment);
  std::string why;
  CHECK(verify_coloring(bundle.graph, col, 2, bundle.delta, &why));
  CHECK(why.empty());

  ReductionBundle again = dc_vc(f, 2);
  CHECK(emit_gr(again.graph) == emit_gr(bundle.graph));
}

TEST_CASE("vertex-cover coloring generator supports more colors without a provider") {
  XsatFormula f(3, {{1, 2, 3}});
  ReductionBundle two = dc_vc(f, 2);
  ReductionBundle three = dc_vc(f, 3);
  // One secondary palette of 3*delta + 1 mutually non-adjacent vertices.
  CHECK(three.graph.num_vertices() == two.graph.num_vertices() + 3 * two.delta + 1);
  CHECK(is_vertex_cover(three.graph, *three.cover_witness));
  CHECK(validate_forest(three.graph, *three.forest_witness).empty());

  auto sat = xsat_bruteforce(f);
  REQUIRE(sat.has_value());
  std::vector<int> assignment;
  for (bool b : *sat) assignment.push_back(b ? 1 : 0);
  Coloring col = three.forward_coloring(assignment);
  CHECK(verify_coloring(three.graph, col, 3, three.delta));
  CHECK(*std::max_element(col.begin(), col.end()) == 3);
}

TEST_CASE("vertex-cover generators validate their certificates") {
  XsatFormula f(3, {{1, 2, 3}});
  ReductionBundle bundle = bdvd_vc(f);
  // All-false misses the clause; all-true over-satisfies it.
  CHECK(thrown_code([&] { bundle.forward_deletion({0, 0, 0}); }) == Errc::invalid_argument);
  CHECK(thrown_code([&] { bundle.forward_deletion({1, 1, 1}); }) == Errc::invalid_argument);
  CHECK(thrown_code([&] { bundle.forward_deletion({1, 0}); }) == Errc::invalid_argument);
  CHECK(thrown_code([&] { bundle.forward_deletion({2, 0, 0}); }) == Errc::invalid_argument);

  ReductionBundle dc = dc_vc(f, 2);
  CHECK(thrown_code([&] { dc.forward_coloring({0, 0, 0}); }) == Errc::invalid_argument);
  CHECK(thrown_code([&] { dc_vc(f, 1); }) == Errc::invalid_argument);
}

// ---------------------------------------------------------------------------
// Bundle directories
// ---------------------------------------------------------------------------

TEST_CASE("bundles round-trip through directories") {
  namespace fs = std::filesystem;
  fs::path root = fs::temp_directory_path() / "degbound-bundle-roundtrip";
  fs::remove_all(root);

  auto roundtrip = [&](const ReductionBundle& bundle, const std::string& name) {
    fs::path dir = root / name;
    save_bundle(bundle, dir.string());
    ReductionBundle loaded = load_bundle(dir.string());
    CHECK(emit_gr(loaded.graph) == emit_gr(bundle.graph));
    CHECK(loaded.problem == bundle.problem);
    CHECK(loaded.generator == bundle.generator);
    CHECK(loaded.delta == bundle.delta);
    CHECK(loaded.chi == bundle.chi);
    CHECK(loaded.budget == bundle.budget);
    CHECK(loaded.metadata == bundle.metadata);
    CHECK(loaded.path_witness.has_value() == bundle.path_witness.has_value());
    if (bundle.path_witness)
      CHECK(emit_td(*loaded.path_witness) == emit_td(*bundle.path_witness));
    CHECK(loaded.forest_witness.has_value() == bundle.forest_witness.has_value());
    if (bundle.forest_witness)
      CHECK(emit_forest(*loaded.forest_witness) == emit_forest(*bundle.forest_witness));
    CHECK(loaded.cover_witness.has_value() == bundle.cover_witness.has_value());
    if (bundle.cover_witness) CHECK(*loaded.cover_witness == *bundle.cover_witness);
    // Forward builders live in process only.
    CHECK(!loaded.forward_deletion);
    CHECK(!loaded.forward_coloring);
  };

  roundtrip(bdvd_pw_delta1(make_csp(1, 1, 3, {{{1}, {{2}}}})), "pw-bdvd");
  roundtrip(dc_pw_delta1(make_csp(1, 1, 4, {{{1}, {{2}}}}), 2), "pw-dc");
  roundtrip(bdvd_td(complete_mcc(2, 2), 2), "td-bdvd");
  roundtrip(dc_vc(XsatFormula(3, {{1, 2, 3}}), 2), "vc-dc");

  CHECK(thrown_code([&] { load_bundle((root / "missing").string()); }) == Errc::io_error);
  fs::remove_all(root);
}
