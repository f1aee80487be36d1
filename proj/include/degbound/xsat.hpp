#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degbound/util.hpp"

namespace degbound {

// A 3-literal clause: nonzero 1-based variable ids, negative means negated.
using XsatClause = std::array<int, 3>;

// Formula in the shared (3,4) shape: every clause holds exactly three
// distinct variables and every variable occurs in at most four clauses
// (validated on construction).  The same shape is read two ways: the classic
// reading (at least one true literal per clause) for transform inputs, and
// the exactly-one-true reading.
class XsatFormula {
 public:
  XsatFormula(int num_vars, std::vector<XsatClause> clauses);

  int num_vars() const { return n_; }
  int num_clauses() const { return static_cast<int>(clauses_.size()); }
  const std::vector<XsatClause>& clauses() const { return clauses_; }

  // assignment[v-1] is the truth value of variable v.
  bool satisfied_classic(const std::vector<bool>& assignment) const;
  bool exactly_one_true(const std::vector<bool>& assignment) const;

 private:
  int n_;
  std::vector<XsatClause> clauses_;
};

// Lexicographically first qualifying assignment (false < true, variable 1
// most significant), or nullopt.  Full 2^n enumeration; desk scale only.
std::optional<std::vector<bool>> xsat_bruteforce(const XsatFormula& f);
std::optional<std::vector<bool>> sat_bruteforce(const XsatFormula& f);

// Classic-satisfiability-preserving transform into the exactly-one-true
// reading: input clause l1 v l2 v l3 becomes (~l1 v a v b), (l2 v b v c),
// (~l3 v c v d) over four fresh variables.  Originals keep ids 1..n; clause i
// (1-based) owns fresh ids n+4(i-1)+1 .. n+4i, in the order a, b, c, d.
XsatFormula sat34_to_xsat34(const XsatFormula& sat34);

// Uniform random formula in the (3,4) shape, deterministic per seed: each
// clause draws three distinct variables that still have spare occurrence
// budget, plus uniform signs.  Throws when num_clauses exceeds what the
// occurrence cap allows.
XsatFormula random_xsat34(int num_vars, int num_clauses, std::uint64_t seed);

// Variable groups of size <= b and clause groups of size <= floor(sqrt(n))
// such that any two variable occurrences across one clause group lie in
// distinct variable groups.
struct VarClausePartition {
  int b = 0;
  std::vector<std::vector<int>> var_groups;     // 1-based variable ids
  std::vector<std::vector<int>> clause_groups;  // 0-based clause indices
};

// Greedy 9-coloring of the primal graph (max degree 8 under the (3,4)
// shape), refined to groups of size <= b; then a greedy (12b+1)-coloring of
// the clause conflict graph (clauses sharing a variable group), refined to
// size <= floor(sqrt(n)).  Requires 1 <= b <= sqrt(n).  The returned
// partition is re-validated before being handed back.
VarClausePartition partition_variables_clauses(const XsatFormula& f, int b);

// Empty means: both partitions cover exactly, sizes respect b and
// floor(sqrt(n)), n_V <= 9 + n/b, n_C <= 12b+1 + m/floor(sqrt(n)), and every
// clause group touches each variable group at most once.
std::vector<std::string> validate_partition(const XsatFormula& f, const VarClausePartition& p);

// Subsets of {1..universe} distinguishing functions U -> {0..d-1} by sums.
struct DetectingFamily {
  int universe = 0;
  int d = 0;
  std::vector<std::vector<int>> sets;
};

// provider "singleton" returns all singletons (verified before returning);
// "lindstrom" is a recognized but unimplemented sublinear alternative.
DetectingFamily build_detecting_family(int universe, int d, const std::string& provider = "singleton");

}  // namespace degbound
