#include "degbound/xsat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

#include "degbound/oracle.hpp"

namespace degbound {

namespace {

constexpr int kMaxClausesPerVar = 4;
constexpr int kMaxBruteforceVars = 30;

int clause_var(int literal) { return std::abs(literal); }

bool literal_true(int literal, const std::vector<bool>& assignment) {
  bool value = assignment[static_cast<std::size_t>(clause_var(literal)) - 1];
  return literal > 0 ? value : !value;
}

int true_literals(const XsatClause& clause, const std::vector<bool>& assignment) {
  int count = 0;
  for (int lit : clause) {
    if (literal_true(lit, assignment)) ++count;
  }
  return count;
}

// Greedy coloring in id order with the smallest color absent from already
// colored neighbors; adjacency is given as sorted neighbor lists.
std::vector<int> greedy_coloring(const std::vector<std::vector<int>>& adj, int max_colors) {
  int n = static_cast<int>(adj.size());
  std::vector<int> color(n, -1);
  std::vector<char> used;
  for (int v = 0; v < n; ++v) {
    used.assign(static_cast<std::size_t>(max_colors), 0);
    for (int u : adj[static_cast<std::size_t>(v)]) {
      if (color[static_cast<std::size_t>(u)] >= 0) used[static_cast<std::size_t>(color[static_cast<std::size_t>(u)])] = 1;
    }
    int c = 0;
    while (c < max_colors && used[static_cast<std::size_t>(c)]) ++c;
    if (c == max_colors) {
      throw Error(Errc::contract_violation, "greedy coloring exceeded the guaranteed palette");
    }
    color[static_cast<std::size_t>(v)] = c;
  }
  return color;
}

// Splits each color class (members kept in ascending id order) into chunks
// of at most chunk_size.
std::vector<std::vector<int>> refine_classes(const std::vector<int>& color, int num_colors, int chunk_size) {
  std::vector<std::vector<int>> classes(static_cast<std::size_t>(num_colors));
  for (int v = 0; v < static_cast<int>(color.size()); ++v) {
    classes[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].push_back(v);
  }
  std::vector<std::vector<int>> groups;
  for (const auto& cls : classes) {
    for (std::size_t start = 0; start < cls.size(); start += static_cast<std::size_t>(chunk_size)) {
      std::size_t stop = std::min(cls.size(), start + static_cast<std::size_t>(chunk_size));
      groups.emplace_back(cls.begin() + static_cast<std::ptrdiff_t>(start), cls.begin() + static_cast<std::ptrdiff_t>(stop));
    }
  }
  return groups;
}

std::optional<std::vector<bool>> first_assignment(const XsatFormula& f, bool exactly_one) {
  int n = f.num_vars();
  if (n > kMaxBruteforceVars) {
    throw Error(Errc::invalid_argument, "formula brute force is limited to 30 variables");
  }
  std::vector<bool> assignment(static_cast<std::size_t>(n), false);
  std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    // Variable 1 is the most significant bit so the scan is lexicographic.
    for (int v = 0; v < n; ++v) {
      assignment[static_cast<std::size_t>(v)] = ((mask >> (n - 1 - v)) & 1) != 0;
    }
    bool ok = exactly_one ? f.exactly_one_true(assignment) : f.satisfied_classic(assignment);
    if (ok) return assignment;
  }
  return std::nullopt;
}

}  // namespace

XsatFormula::XsatFormula(int num_vars, std::vector<XsatClause> clauses)
    : n_(num_vars), clauses_(std::move(clauses)) {
  if (n_ < 0) throw Error(Errc::invalid_formula, "negative variable count");
  std::vector<int> occurrences(static_cast<std::size_t>(n_), 0);
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    const XsatClause& clause = clauses_[i];
    std::array<int, 3> vars{};
    for (int j = 0; j < 3; ++j) {
      int lit = clause[static_cast<std::size_t>(j)];
      int var = clause_var(lit);
      if (lit == 0 || var > n_) {
        throw Error(Errc::invalid_formula,
                    "clause " + std::to_string(i) + ": literal " + std::to_string(lit) + " out of range");
      }
      vars[static_cast<std::size_t>(j)] = var;
    }
    std::sort(vars.begin(), vars.end());
    if (vars[0] == vars[1] || vars[1] == vars[2]) {
      throw Error(Errc::invalid_formula, "clause " + std::to_string(i) + ": variables must be distinct");
    }
    for (int var : vars) {
      if (++occurrences[static_cast<std::size_t>(var) - 1] > kMaxClausesPerVar) {
        throw Error(Errc::invalid_formula,
                    "variable " + std::to_string(var) + " occurs in more than " +
                        std::to_string(kMaxClausesPerVar) + " clauses");
      }
    }
  }
}

bool XsatFormula::satisfied_classic(const std::vector<bool>& assignment) const {
  if (static_cast<int>(assignment.size()) != n_) {
    throw Error(Errc::invalid_argument, "assignment size mismatch");
  }
  for (const XsatClause& clause : clauses_) {
    if (true_literals(clause, assignment) == 0) return false;
  }
  return true;
}

bool XsatFormula::exactly_one_true(const std::vector<bool>& assignment) const {
  if (static_cast<int>(assignment.size()) != n_) {
    throw Error(Errc::invalid_argument, "assignment size mismatch");
  }
  for (const XsatClause& clause : clauses_) {
    if (true_literals(clause, assignment) != 1) return false;
  }
  return true;
}

std::optional<std::vector<bool>> xsat_bruteforce(const XsatFormula& f) {
  return first_assignment(f, /*exactly_one=*/true);
}

std::optional<std::vector<bool>> sat_bruteforce(const XsatFormula& f) {
  return first_assignment(f, /*exactly_one=*/false);
}

XsatFormula sat34_to_xsat34(const XsatFormula& sat34) {
  int n = sat34.num_vars();
  std::vector<XsatClause> out;
  out.reserve(3 * sat34.clauses().size());
  for (std::size_t i = 0; i < sat34.clauses().size(); ++i) {
    const XsatClause& clause = sat34.clauses()[i];
    int a = n + 4 * static_cast<int>(i) + 1;
    int b = a + 1;
    int c = a + 2;
    int d = a + 3;
    out.push_back({-clause[0], a, b});
    out.push_back({clause[1], b, c});
    out.push_back({-clause[2], c, d});
  }
  return XsatFormula(n + 4 * static_cast<int>(sat34.clauses().size()), std::move(out));
}

XsatFormula random_xsat34(int num_vars, int num_clauses, std::uint64_t seed) {
  if (num_vars < 3 || num_clauses < 0) {
    throw Error(Errc::invalid_argument, "random_xsat34 needs at least 3 variables");
  }
  if (3 * num_clauses > kMaxClausesPerVar * num_vars) {
    throw Error(Errc::invalid_argument, "occurrence cap cannot host that many clauses");
  }
  Rng rng(seed);
  std::vector<int> budget(static_cast<std::size_t>(num_vars), kMaxClausesPerVar);
  std::vector<XsatClause> clauses;
  clauses.reserve(static_cast<std::size_t>(num_clauses));
  for (int i = 0; i < num_clauses; ++i) {
    std::vector<int> open;
    for (int v = 1; v <= num_vars; ++v) {
      if (budget[static_cast<std::size_t>(v) - 1] > 0) open.push_back(v);
    }
    if (open.size() < 3) {
      throw Error(Errc::invalid_argument, "occurrence cap cannot host that many clauses");
    }
    XsatClause clause{};
    for (int j = 0; j < 3; ++j) {
      std::size_t pick = static_cast<std::size_t>(rng.below(open.size()));
      int var = open[pick];
      open.erase(open.begin() + static_cast<std::ptrdiff_t>(pick));
      --budget[static_cast<std::size_t>(var) - 1];
      clause[static_cast<std::size_t>(j)] = rng.below(2) == 0 ? var : -var;
    }
    clauses.push_back(clause);
  }
  return XsatFormula(num_vars, std::move(clauses));
}

VarClausePartition partition_variables_clauses(const XsatFormula& f, int b) {
  int n = f.num_vars();
  int m = f.num_clauses();
  if (b < 1 || static_cast<long long>(b) * b > n) {
    throw Error(Errc::invalid_argument, "group size b must satisfy 1 <= b <= sqrt(n)");
  }

  // Primal graph: variables adjacent when they share a clause.  Every
  // variable sits in at most 4 clauses with 2 partners each, so degree <= 8
  // and 9 greedy colors always suffice.
  std::vector<std::set<int>> primal(static_cast<std::size_t>(n));
  for (const XsatClause& clause : f.clauses()) {
    for (int j = 0; j < 3; ++j) {
      for (int k = j + 1; k < 3; ++k) {
        int u = clause_var(clause[static_cast<std::size_t>(j)]) - 1;
        int v = clause_var(clause[static_cast<std::size_t>(k)]) - 1;
        primal[static_cast<std::size_t>(u)].insert(v);
        primal[static_cast<std::size_t>(v)].insert(u);
      }
    }
  }
  std::vector<std::vector<int>> primal_adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    primal_adj[static_cast<std::size_t>(v)].assign(primal[static_cast<std::size_t>(v)].begin(),
                                                   primal[static_cast<std::size_t>(v)].end());
  }
  std::vector<int> var_color = greedy_coloring(primal_adj, 9);

  VarClausePartition part;
  part.b = b;
  part.var_groups = refine_classes(var_color, 9, b);
  for (auto& group : part.var_groups) {
    for (int& v : group) ++v;  // back to 1-based variable ids
  }

  std::vector<int> group_of(static_cast<std::size_t>(n), -1);
  for (int g = 0; g < static_cast<int>(part.var_groups.size()); ++g) {
    for (int v : part.var_groups[static_cast<std::size_t>(g)]) {
      group_of[static_cast<std::size_t>(v) - 1] = g;
    }
  }

  // Clause conflict graph: clauses adjacent when they touch a common
  // variable group.  A clause meets 3 groups, each group holds <= b
  // variables with <= 4 clauses each, so degree <= 12b and 12b+1 colors
  // suffice; same-color clauses then use pairwise disjoint group sets.
  std::vector<std::vector<int>> clauses_of_group(part.var_groups.size());
  for (int i = 0; i < m; ++i) {
    for (int lit : f.clauses()[static_cast<std::size_t>(i)]) {
      clauses_of_group[static_cast<std::size_t>(group_of[static_cast<std::size_t>(clause_var(lit)) - 1])].push_back(i);
    }
  }
  std::vector<std::set<int>> conflict(static_cast<std::size_t>(m));
  for (const auto& members : clauses_of_group) {
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        if (members[x] == members[y]) continue;
        conflict[static_cast<std::size_t>(members[x])].insert(members[y]);
        conflict[static_cast<std::size_t>(members[y])].insert(members[x]);
      }
    }
  }
  std::vector<std::vector<int>> conflict_adj(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    conflict_adj[static_cast<std::size_t>(i)].assign(conflict[static_cast<std::size_t>(i)].begin(),
                                                     conflict[static_cast<std::size_t>(i)].end());
  }
  std::vector<int> clause_color = greedy_coloring(conflict_adj, 12 * b + 1);
  int root = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while ((root + 1) * (root + 1) <= n) ++root;
  while (root * root > n) --root;
  part.clause_groups = refine_classes(clause_color, 12 * b + 1, root);

  std::vector<std::string> why = validate_partition(f, part);
  if (!why.empty()) {
    throw Error(Errc::contract_violation, "partition self-check failed: " + why.front());
  }
  return part;
}

std::vector<std::string> validate_partition(const XsatFormula& f, const VarClausePartition& p) {
  std::vector<std::string> why;
  int n = f.num_vars();
  int m = f.num_clauses();
  if (p.b < 1) {
    why.push_back("group size bound b must be positive");
    return why;
  }

  std::vector<int> var_seen(static_cast<std::size_t>(n), 0);
  for (std::size_t g = 0; g < p.var_groups.size(); ++g) {
    const auto& group = p.var_groups[g];
    if (group.empty()) why.push_back("variable group " + std::to_string(g) + " is empty");
    if (static_cast<int>(group.size()) > p.b) {
      why.push_back("variable group " + std::to_string(g) + " exceeds size " + std::to_string(p.b));
    }
    for (int v : group) {
      if (v < 1 || v > n) {
        why.push_back("variable " + std::to_string(v) + " out of range");
      } else {
        ++var_seen[static_cast<std::size_t>(v) - 1];
      }
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (var_seen[static_cast<std::size_t>(v) - 1] != 1) {
      why.push_back("variable " + std::to_string(v) + " covered " +
                    std::to_string(var_seen[static_cast<std::size_t>(v) - 1]) + " times");
    }
  }
  long long n_v = static_cast<long long>(p.var_groups.size());
  if (n_v > 9 && (n_v - 9) * p.b > n) {
    why.push_back("variable group count exceeds 9 + n/b");
  }

  int root = 0;
  while ((root + 1) * (root + 1) <= n) ++root;
  std::vector<int> clause_seen(static_cast<std::size_t>(m), 0);
  std::vector<int> group_of(static_cast<std::size_t>(n), -1);
  for (int g = 0; g < static_cast<int>(p.var_groups.size()); ++g) {
    for (int v : p.var_groups[static_cast<std::size_t>(g)]) {
      if (v >= 1 && v <= n) group_of[static_cast<std::size_t>(v) - 1] = g;
    }
  }
  for (std::size_t g = 0; g < p.clause_groups.size(); ++g) {
    const auto& group = p.clause_groups[g];
    if (group.empty()) why.push_back("clause group " + std::to_string(g) + " is empty");
    if (static_cast<int>(group.size()) > std::max(root, 1)) {
      why.push_back("clause group " + std::to_string(g) + " exceeds size floor(sqrt(n))");
    }
    std::set<int> touched;
    bool separated = true;
    for (int ci : group) {
      if (ci < 0 || ci >= m) {
        why.push_back("clause index " + std::to_string(ci) + " out of range");
        continue;
      }
      ++clause_seen[static_cast<std::size_t>(ci)];
      for (int lit : f.clauses()[static_cast<std::size_t>(ci)]) {
        int vg = group_of[static_cast<std::size_t>(clause_var(lit)) - 1];
        if (vg < 0 || !touched.insert(vg).second) separated = false;
      }
    }
    if (!separated) {
      why.push_back("clause group " + std::to_string(g) + " touches a variable group twice");
    }
  }
  for (int ci = 0; ci < m; ++ci) {
    if (clause_seen[static_cast<std::size_t>(ci)] != 1) {
      why.push_back("clause " + std::to_string(ci) + " covered " +
                    std::to_string(clause_seen[static_cast<std::size_t>(ci)]) + " times");
    }
  }
  long long n_c = static_cast<long long>(p.clause_groups.size());
  long long cap = 12LL * p.b + 1;
  if (root >= 1 && n_c > cap && (n_c - cap) * root > m) {
    why.push_back("clause group count exceeds 12b+1 + m/sqrt(n)");
  }
  return why;
}

DetectingFamily build_detecting_family(int universe, int d, const std::string& provider) {
  if (universe < 1 || d < 1) {
    throw Error(Errc::invalid_argument, "detecting family needs universe >= 1 and d >= 1");
  }
  if (provider == "lindstrom") {
    throw Error(Errc::not_implemented, "sublinear detecting families are not implemented");
  }
  if (provider != "singleton") {
    throw Error(Errc::invalid_argument, "unknown detecting-family provider: " + provider);
  }
  DetectingFamily family;
  family.universe = universe;
  family.d = d;
  for (int i = 1; i <= universe; ++i) family.sets.push_back({i});
  if (!verify_detecting_family(universe, d, family.sets)) {
    throw Error(Errc::contract_violation, "constructed family fails the detection check");
  }
  return family;
}

}  // namespace degbound
