#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "degbound/oracle.hpp"
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

// Every formula on exactly `vars` variables with `count` clauses drawn from
// the full clause space (distinct variable triples, all sign patterns),
// clauses pairwise distinct and in ascending encoding order.
std::vector<XsatFormula> all_formulas(int vars, int count) {
  std::vector<XsatClause> space;
  for (int a = 1; a <= vars; ++a)
    for (int b = a + 1; b <= vars; ++b)
      for (int c = b + 1; c <= vars; ++c)
        for (int signs = 0; signs < 8; ++signs)
          space.push_back({(signs & 1) ? -a : a, (signs & 2) ? -b : b, (signs & 4) ? -c : c});

  std::vector<XsatFormula> out;
  std::vector<int> pick(static_cast<std::size_t>(count));
  auto rec = [&](auto&& self, int depth, int from) -> void {
    if (depth == count) {
      std::vector<XsatClause> clauses;
      for (int p : pick) clauses.push_back(space[static_cast<std::size_t>(p)]);
      out.emplace_back(vars, std::move(clauses));
      return;
    }
    for (int i = from; i < static_cast<int>(space.size()); ++i) {
      pick[static_cast<std::size_t>(depth)] = i;
      self(self, depth + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace

TEST_CASE("formula construction validates the (3,4) shape") {
  XsatFormula f(4, {{1, -2, 3}, {-1, 2, 4}});
  CHECK(f.num_vars() == 4);
  CHECK(f.num_clauses() == 2);

  CHECK(thrown_code([] { XsatFormula(3, {{1, 0, 3}}); }) == Errc::invalid_formula);
  CHECK(thrown_code([] { XsatFormula(3, {{1, 2, 4}}); }) == Errc::invalid_formula);
  CHECK(thrown_code([] { XsatFormula(3, {{1, -1, 2}}); }) == Errc::invalid_formula);

  // Four clauses on one variable are fine; a fifth crosses the cap.
  std::vector<XsatClause> four = {{1, 2, 3}, {1, 4, 5}, {-1, 6, 7}, {1, 8, 9}};
  CHECK(XsatFormula(11, four).num_clauses() == 4);
  std::vector<XsatClause> five = four;
  five.push_back({-1, 10, 11});
  CHECK(thrown_code([&] { XsatFormula(11, five); }) == Errc::invalid_formula);
}

TEST_CASE("classic and exactly-one-true readings disagree as expected") {
  XsatFormula f(3, {{1, -2, 3}});
  CHECK(f.satisfied_classic({true, true, true}));
  CHECK_FALSE(f.exactly_one_true({true, true, true}));  // two true literals
  CHECK(f.exactly_one_true({true, true, false}));
  CHECK_FALSE(f.satisfied_classic({false, true, false}));
  CHECK_FALSE(f.exactly_one_true({false, true, false}));
  CHECK_THROWS_AS((void)f.satisfied_classic({true}), Error);
}

TEST_CASE("brute-force search returns the lexicographically first witness") {
  XsatFormula single(3, {{1, 2, 3}});
  CHECK(sat_bruteforce(single) == std::vector<bool>{false, false, true});
  CHECK(xsat_bruteforce(single) == std::vector<bool>{false, false, true});

  // Exactly-one on both a triple and its negation is contradictory (the
  // second clause would need exactly two true variables).
  XsatFormula clash(3, {{1, 2, 3}, {-1, -2, -3}});
  CHECK_FALSE(xsat_bruteforce(clash).has_value());
  CHECK(sat_bruteforce(clash) == std::vector<bool>{false, false, true});

  XsatFormula empty(2, {});
  CHECK(xsat_bruteforce(empty) == std::vector<bool>{false, false});
}

TEST_CASE("transform emits three clauses and four fresh variables per input clause") {
  XsatFormula in(3, {{1, 2, 3}});
  XsatFormula out = sat34_to_xsat34(in);
  CHECK(out.num_vars() == 7);    // 3 + 4
  CHECK(out.num_clauses() == 3);  // 3 * 1
  CHECK(out.clauses()[0] == XsatClause{-1, 4, 5});
  CHECK(out.clauses()[1] == XsatClause{2, 5, 6});
  CHECK(out.clauses()[2] == XsatClause{-3, 6, 7});

  XsatFormula in2(5, {{-1, 2, -3}, {3, -4, 5}});
  XsatFormula out2 = sat34_to_xsat34(in2);
  CHECK(out2.num_vars() == 13);
  CHECK(out2.num_clauses() == 6);
  CHECK(out2.clauses()[3] == XsatClause{-3, 10, 11});
  CHECK(out2.clauses()[4] == XsatClause{-4, 11, 12});
  CHECK(out2.clauses()[5] == XsatClause{-5, 12, 13});
}

TEST_CASE("transform preserves satisfiability on every two-clause formula over four variables") {
  for (int count = 1; count <= 2; ++count) {
    for (const XsatFormula& f : all_formulas(4, count)) {
      XsatFormula g = sat34_to_xsat34(f);
      auto classic = sat_bruteforce(f);
      auto exact = xsat_bruteforce(g);
      REQUIRE(classic.has_value() == exact.has_value());
      if (exact) {
        // The witness must restrict to a classic model of the input.
        std::vector<bool> restricted(exact->begin(), exact->begin() + f.num_vars());
        CHECK(f.satisfied_classic(restricted));
      }
    }
  }
}

TEST_CASE("transform preserves satisfiability on random three-clause formulas") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    XsatFormula f = random_xsat34(5, 3, seed);
    XsatFormula g = sat34_to_xsat34(f);
    REQUIRE(g.num_vars() == 17);
    auto classic = sat_bruteforce(f);
    auto exact = xsat_bruteforce(g);
    REQUIRE(classic.has_value() == exact.has_value());
    if (exact) {
      std::vector<bool> restricted(exact->begin(), exact->begin() + f.num_vars());
      CHECK(f.satisfied_classic(restricted));
    }
  }
}

TEST_CASE("random formula generator respects the shape and the seed") {
  XsatFormula a = random_xsat34(10, 13, 7);  // 3*13 = 39 <= 4*10
  XsatFormula b = random_xsat34(10, 13, 7);
  CHECK(a.clauses() == b.clauses());
  XsatFormula c = random_xsat34(10, 13, 8);
  CHECK(a.clauses() != c.clauses());
  CHECK(thrown_code([] { random_xsat34(10, 14, 0); }) == Errc::invalid_argument);
  CHECK(thrown_code([] { random_xsat34(2, 1, 0); }) == Errc::invalid_argument);
}

TEST_CASE("partition places the variables of one clause in three distinct groups") {
  XsatFormula f(9, {{1, 2, 3}});
  VarClausePartition p = partition_variables_clauses(f, 3);
  CHECK(validate_partition(f, p).empty());
  CHECK(p.clause_groups.size() == 1);
  CHECK(p.clause_groups[0] == std::vector<int>{0});

  std::set<std::size_t> groups;
  for (int v : {1, 2, 3}) {
    for (std::size_t g = 0; g < p.var_groups.size(); ++g) {
      const auto& members = p.var_groups[g];
      if (std::find(members.begin(), members.end(), v) != members.end()) groups.insert(g);
    }
  }
  CHECK(groups.size() == 3);

  CHECK(thrown_code([&] { partition_variables_clauses(f, 4); }) == Errc::invalid_argument);
  CHECK(thrown_code([&] { partition_variables_clauses(f, 0); }) == Errc::invalid_argument);
}

TEST_CASE("partition meets the group-count bound at the boundary size") {
  XsatFormula f = random_xsat34(16, 10, 21);
  VarClausePartition p = partition_variables_clauses(f, 4);
  CHECK(validate_partition(f, p).empty());
  CHECK(p.var_groups.size() <= 13);  // 9 + 16/4
}

TEST_CASE("partition validates on random formulas and rejects tampering") {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 20; ++seed) {
    int n = 9 + static_cast<int>(seed % 56);  // 9..64
    int m = std::min(4 * n / 3, 3 + static_cast<int>(seed % 40));
    int b = 1 + static_cast<int>(seed % 8);
    if (static_cast<long long>(b) * b > n) continue;
    XsatFormula f = random_xsat34(n, m, seed * 977 + 5);
    VarClausePartition p = partition_variables_clauses(f, b);
    REQUIRE(validate_partition(f, p).empty());
    CHECK(static_cast<long long>(p.var_groups.size()) <= 9 + n / b);
    ++checked;

    if (checked == 1) {
      // Moving a variable between groups breaks exact coverage.
      VarClausePartition moved = p;
      REQUIRE(moved.var_groups.size() >= 2);
      int v = moved.var_groups[0].back();
      moved.var_groups[0].pop_back();
      moved.var_groups[1].push_back(v);
      CHECK_FALSE(validate_partition(f, moved).empty());

      // Fusing all clause groups into one breaks the size cap or separation.
      VarClausePartition fused = p;
      std::vector<int> everything;
      for (const auto& g : fused.clause_groups)
        everything.insert(everything.end(), g.begin(), g.end());
      fused.clause_groups = {everything};
      if (m > 1) CHECK_FALSE(validate_partition(f, fused).empty());
    }
  }
}

TEST_CASE("singleton detecting families are built and verified") {
  DetectingFamily f = build_detecting_family(3, 2);
  CHECK(f.sets == std::vector<std::vector<int>>{{1}, {2}, {3}});

  for (int u = 1; u <= 6; ++u) {
    for (int d = 1; d <= 4; ++d) {
      DetectingFamily g = build_detecting_family(u, d, "singleton");
      CHECK(g.sets.size() == static_cast<std::size_t>(u));
      CHECK(verify_detecting_family(u, d, g.sets));
    }
  }

  // Two elements sharing one set cannot be told apart by sums.
  std::vector<int> counterexample;
  CHECK_FALSE(verify_detecting_family(2, 2, {{1, 2}}, &counterexample));
  CHECK(counterexample.size() == 2);

  CHECK(thrown_code([] { build_detecting_family(0, 2); }) == Errc::invalid_argument);
  CHECK(thrown_code([] { build_detecting_family(3, 2, "mystery"); }) == Errc::invalid_argument);
  CHECK(thrown_code([] { build_detecting_family(3, 2, "lindstrom"); }) == Errc::not_implemented);
}
