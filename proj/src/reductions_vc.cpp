// Vertex-cover hardness generators: exactly-one-true 3-SAT (each variable in
// at most four clauses) compiled into bounded degree vertex deletion and
// defective coloring instances whose vertex cover is small.
//
// Both constructions group variables (choice gadgets with one assignment
// vertex per mod-encoded codeword) and clauses (one clause-vertex pair per
// member of a verified 4-detecting family over each clause group).  The
// witness is the explicit vertex cover, also packaged as an elimination
// forest: the cover chained root-to-bottom and the remaining (independent)
// vertices below the chain end.

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "degbound/oracle.hpp"
#include "degbound/reductions.hpp"
#include "degbound/util.hpp"
#include "degbound/xsat.hpp"
#include "reductions_internal.hpp"

namespace degbound {

namespace {

using detail::GraphBuilder;
using detail::put_count;

// Smallest power `base^t >= max(value, base)` for base a power of two.
int pad_to_power(int value, int base) {
  long long p = base;
  while (p < value) p *= base;
  if (p > (1 << 26)) throw Error(Errc::invalid_argument, "padded variable count too large");
  return static_cast<int>(p);
}

int log2_exact(int value) {
  int bits = 0;
  while ((1 << bits) < value) ++bits;
  if ((1 << bits) != value) throw Error(Errc::invalid_argument, "internal error: not a power of two");
  return bits;
}

// Grouped view shared by both constructions: padded formula, partition,
// verified singleton detecting families, and the mod-encoded choice layout
// with `per_group` assignment vertices per variable group.
struct VcLayout {
  XsatFormula original;
  int padded_vars = 0;
  int b = 0;          // variable group size cap
  int per_group = 0;  // assignment vertices per group
  VarClausePartition part;
  std::vector<DetectingFamily> families;
  std::vector<int> group_of;      // var (1-based) -> group index (0-based)
  std::vector<int> pos_in_group;  // var (1-based) -> bit position

  VcLayout(const XsatFormula& f, int pad_base, int bits_divisor)
      : original(f) {
    padded_vars = pad_to_power(f.num_vars(), pad_base);
    b = log2_exact(padded_vars) / bits_divisor;
    per_group = 1 << (log2_exact(padded_vars) / bits_divisor);
    XsatFormula padded(padded_vars, f.clauses());
    part = partition_variables_clauses(padded, b);
    group_of.assign(static_cast<std::size_t>(padded_vars) + 1, -1);
    pos_in_group.assign(static_cast<std::size_t>(padded_vars) + 1, -1);
    for (std::size_t g = 0; g < part.var_groups.size(); ++g) {
      std::vector<int> vars = part.var_groups[g];
      std::sort(vars.begin(), vars.end());
      for (std::size_t t = 0; t < vars.size(); ++t) {
        group_of[static_cast<std::size_t>(vars[t])] = static_cast<int>(g);
        pos_in_group[static_cast<std::size_t>(vars[t])] = static_cast<int>(t);
      }
    }
    for (const auto& group : part.clause_groups) {
      DetectingFamily fam =
          build_detecting_family(static_cast<int>(group.size()), 4, "singleton");
      if (!verify_detecting_family(fam.universe, fam.d, fam.sets))
        throw Error(Errc::invalid_argument, "detecting family failed verification");
      families.push_back(std::move(fam));
    }
  }

  int num_var_groups() const { return static_cast<int>(part.var_groups.size()); }
  int num_clause_groups() const { return static_cast<int>(part.clause_groups.size()); }

  long long family_sets_total() const {
    long long total = 0;
    for (const auto& fam : families) total += static_cast<long long>(fam.sets.size());
    return total;
  }

  int family_max() const {
    int best = 0;
    for (const auto& fam : families) best = std::max(best, static_cast<int>(fam.sets.size()));
    return best;
  }

  int group_bits(int g) const {
    return static_cast<int>(part.var_groups[static_cast<std::size_t>(g)].size());
  }

  // True when assignment vertex q (1-based) of group g makes the literal of
  // clause `cl` lying in group g true.  Mod-encoding: vertex q encodes
  // codeword (q-1) mod 2^|V_g|, bit t = value of the t-th variable (sorted).
  bool vertex_satisfies(int g, int q, const XsatClause& cl) const {
    int code = (q - 1) & ((1 << group_bits(g)) - 1);
    for (int lit : cl) {
      int var = lit > 0 ? lit : -lit;
      if (group_of[static_cast<std::size_t>(var)] != g) continue;
      int bit = (code >> pos_in_group[static_cast<std::size_t>(var)]) & 1;
      return (bit == 1) == (lit > 0);
    }
    return false;
  }

  // Choice vertices (as (group, q) pairs) adjacent to the clause-pair vertex
  // of family member `member` (1-based positions into clause group `ci`).
  std::vector<std::pair<int, int>> clause_neighbors(int ci, const std::vector<int>& member) const {
    std::vector<std::pair<int, int>> out;
    for (int pos : member) {
      int clause_idx = part.clause_groups[static_cast<std::size_t>(ci)][static_cast<std::size_t>(pos) - 1];
      const XsatClause& cl = original.clauses()[static_cast<std::size_t>(clause_idx)];
      for (int lit : cl) {
        int var = lit > 0 ? lit : -lit;
        int g = group_of[static_cast<std::size_t>(var)];
        for (int q = 1; q <= per_group; ++q)
          if (vertex_satisfies(g, q, cl)) out.emplace_back(g, q);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Validates the certificate and returns the canonical vertex index
  // (1-based q) per variable group.  Dummy variables read as false.
  std::vector<int> canonical_choice(const std::vector<int>& assignment) const {
    if (static_cast<int>(assignment.size()) != original.num_vars())
      throw Error(Errc::invalid_argument, "assignment must cover every original variable");
    std::vector<bool> bits(static_cast<std::size_t>(original.num_vars()));
    for (std::size_t i = 0; i < assignment.size(); ++i) {
      if (assignment[i] != 0 && assignment[i] != 1)
        throw Error(Errc::invalid_argument, "assignment entries must be 0 or 1");
      bits[i] = assignment[i] == 1;
    }
    if (!original.exactly_one_true(bits))
      throw Error(Errc::invalid_argument, "assignment is not exactly-one-true");
    std::vector<int> canonical;
    for (std::size_t g = 0; g < part.var_groups.size(); ++g) {
      std::vector<int> vars = part.var_groups[g];
      std::sort(vars.begin(), vars.end());
      int code = 0;
      for (std::size_t t = 0; t < vars.size(); ++t) {
        bool value = vars[t] <= original.num_vars() && bits[static_cast<std::size_t>(vars[t]) - 1];
        if (value) code |= 1 << t;
      }
      canonical.push_back(code + 1);
    }
    return canonical;
  }
};

// Cover-chain elimination forest: the cover in order, everything else below.
EliminationForest cover_chain_forest(int num_vertices, const VertexSet& cover) {
  std::vector<bool> in_cover(static_cast<std::size_t>(num_vertices), false);
  for (Vertex v : cover) in_cover[static_cast<std::size_t>(v) - 1] = true;
  EliminationForest forest;
  forest.parent.assign(static_cast<std::size_t>(num_vertices), 0);
  Vertex prev = 0;
  for (Vertex v : cover) {
    forest.parent[static_cast<std::size_t>(v) - 1] = static_cast<int>(prev);
    prev = v;
  }
  for (int v = 1; v <= num_vertices; ++v)
    if (!in_cover[static_cast<std::size_t>(v) - 1])
      forest.parent[static_cast<std::size_t>(v) - 1] = static_cast<int>(prev);
  return forest;
}

void put_layout_metadata(ReductionBundle& bundle, const VcLayout& layout) {
  put_count(bundle.metadata, "padded_vars", layout.padded_vars);
  put_count(bundle.metadata, "dummy_vars", layout.padded_vars - layout.original.num_vars());
  put_count(bundle.metadata, "group_size_cap", layout.b);
  put_count(bundle.metadata, "choice_vertices_per_group", layout.per_group);
  put_count(bundle.metadata, "var_groups", layout.num_var_groups());
  put_count(bundle.metadata, "clause_groups", layout.num_clause_groups());
  put_count(bundle.metadata, "family_sets", layout.family_sets_total());
}

}  // namespace

// ---------------------------------------------------------------------------
// Bounded degree vertex deletion: delta = n^3 over the padded variable count,
// budget = number of variable groups (delete one assignment vertex each).
// ---------------------------------------------------------------------------

ReductionBundle bdvd_vc(const XsatFormula& formula) {
  auto layout = std::make_shared<VcLayout>(formula, 4, 1);
  const int n = layout->padded_vars;
  if (n > 1024)
    throw Error(Errc::invalid_argument, "variable count too large for the cubic degree bound");
  const long long delta = static_cast<long long>(n) * n * n;
  const int n_v = layout->num_var_groups();
  const long long budget = n_v;

  GraphBuilder bld;
  auto vgroups = std::make_shared<std::vector<std::vector<Vertex>>>();
  VertexSet cover;
  for (int g = 0; g < n_v; ++g) {
    vgroups->push_back(bld.vertices(layout->per_group));
    Vertex kappa = bld.vertex();
    Vertex lambda = bld.vertex();
    cover.push_back(kappa);
    cover.push_back(lambda);
    for (Vertex v : vgroups->back()) {
      bld.edge(kappa, v);
      bld.edge(lambda, v);
    }
    bld.leaves(kappa, static_cast<int>(delta + 1 - layout->per_group));
    bld.leaves(lambda, static_cast<int>(delta + 1 - layout->per_group));
  }
  Vertex first_clause_vertex = 0;
  for (int ci = 0; ci < layout->num_clause_groups(); ++ci)
    for (const auto& member : layout->families[static_cast<std::size_t>(ci)].sets) {
      auto nbrs = layout->clause_neighbors(ci, member);
      const long long csize = static_cast<long long>(member.size());
      Vertex c = bld.vertex();
      Vertex cp = bld.vertex();
      if (first_clause_vertex == 0) first_clause_vertex = c;
      cover.push_back(c);
      cover.push_back(cp);
      std::vector<bool> adjacent(static_cast<std::size_t>(n_v) * layout->per_group, false);
      for (const auto& [g, q] : nbrs) {
        bld.edge(c, (*vgroups)[static_cast<std::size_t>(g)][static_cast<std::size_t>(q) - 1]);
        adjacent[static_cast<std::size_t>(g * layout->per_group + q - 1)] = true;
      }
      long long complement = 0;
      for (int g = 0; g < n_v; ++g)
        for (int q = 1; q <= layout->per_group; ++q)
          if (!adjacent[static_cast<std::size_t>(g * layout->per_group + q - 1)]) {
            bld.edge(cp, (*vgroups)[static_cast<std::size_t>(g)][static_cast<std::size_t>(q) - 1]);
            ++complement;
          }
      long long c_leaves = delta + csize - static_cast<long long>(nbrs.size());
      long long cp_leaves = delta + (budget - csize) - complement;
      if (c_leaves < 0 || cp_leaves < 0)
        throw Error(Errc::invalid_argument, "degree budget exceeded by clause gadget");
      bld.leaves(c, static_cast<int>(c_leaves));
      bld.leaves(cp, static_cast<int>(cp_leaves));
    }

  ReductionBundle bundle;
  bundle.graph = bld.build();
  bundle.problem = ProblemKind::bdvd;
  bundle.generator = "bdvd-vc";
  bundle.delta = static_cast<int>(delta);
  bundle.budget = budget;
  bundle.cover_witness = cover;
  bundle.forest_witness = cover_chain_forest(bld.n, cover);
  bundle.forward_deletion = [layout, vgroups](const std::vector<int>& assignment) {
    std::vector<int> canonical = layout->canonical_choice(assignment);
    VertexSet s;
    for (std::size_t g = 0; g < canonical.size(); ++g)
      s.push_back((*vgroups)[g][static_cast<std::size_t>(canonical[g]) - 1]);
    return s;
  };
  put_layout_metadata(bundle, *layout);
  put_count(bundle.metadata, "budget", budget);
  put_count(bundle.metadata, "first_clause_vertex", first_clause_vertex);
  put_count(bundle.metadata, "cover_size", static_cast<long long>(cover.size()));
  put_count(bundle.metadata, "vertices", bld.n);
  return bundle;
}

// ---------------------------------------------------------------------------
// Defective coloring: delta = var groups + clause groups * largest family,
// palette cliques instead of leaves, no deletion budget.
// ---------------------------------------------------------------------------

ReductionBundle dc_vc(const XsatFormula& formula, int chi) {
  if (chi < 2) throw Error(Errc::invalid_argument, "defective coloring needs chi >= 2");
  auto layout = std::make_shared<VcLayout>(formula, 16, 4);
  const int n_v = layout->num_var_groups();
  const long long delta =
      n_v + static_cast<long long>(layout->num_clause_groups()) * layout->family_max();
  const int root = layout->per_group;  // fourth root of the padded count
  if (delta - (root - 1) < 0)
    throw Error(Errc::invalid_argument, "defect bound too small for the choice gadget");

  GraphBuilder bld;
  VertexSet cover;
  auto blues = std::make_shared<std::vector<Vertex>>(bld.vertices(static_cast<int>(delta) + 1));
  auto reds = std::make_shared<std::vector<Vertex>>(bld.vertices(2 * static_cast<int>(delta) + 1));
  for (Vertex b : *blues)
    for (Vertex r : *reds) bld.edge(b, r);
  for (Vertex v : *blues) cover.push_back(v);
  for (Vertex v : *reds) cover.push_back(v);

  auto prefix_edges = [&](Vertex from, const std::vector<Vertex>& pool, long long count) {
    if (count < 0 || count > static_cast<long long>(pool.size()))
      throw Error(Errc::invalid_argument, "palette prefix out of range");
    for (long long t = 0; t < count; ++t) bld.edge(from, pool[static_cast<std::size_t>(t)]);
  };

  auto vgroups = std::make_shared<std::vector<std::vector<Vertex>>>();
  auto kappas = std::make_shared<std::vector<Vertex>>();
  auto lambdas = std::make_shared<std::vector<Vertex>>();
  for (int g = 0; g < n_v; ++g) {
    vgroups->push_back(bld.vertices(root));
    Vertex kappa = bld.vertex();
    Vertex lambda = bld.vertex();
    kappas->push_back(kappa);
    lambdas->push_back(lambda);
    cover.push_back(kappa);
    cover.push_back(lambda);
    for (Vertex v : vgroups->back()) {
      bld.edge(kappa, v);
      bld.edge(lambda, v);
    }
    prefix_edges(kappa, *reds, delta + 1);
    prefix_edges(kappa, *blues, delta - 1);
    prefix_edges(lambda, *blues, delta + 1);
    prefix_edges(lambda, *reds, delta - (root - 1));
  }

  auto cpairs = std::make_shared<std::vector<std::pair<Vertex, Vertex>>>();
  for (int ci = 0; ci < layout->num_clause_groups(); ++ci)
    for (const auto& member : layout->families[static_cast<std::size_t>(ci)].sets) {
      auto nbrs = layout->clause_neighbors(ci, member);
      const long long csize = static_cast<long long>(member.size());
      Vertex c = bld.vertex();
      Vertex cp = bld.vertex();
      cover.push_back(c);
      cover.push_back(cp);
      cpairs->emplace_back(c, cp);
      for (const auto& [g, q] : nbrs) {
        Vertex v = (*vgroups)[static_cast<std::size_t>(g)][static_cast<std::size_t>(q) - 1];
        bld.edge(c, v);
        bld.edge(cp, v);
      }
      prefix_edges(c, *reds, delta + 1);
      prefix_edges(c, *blues, delta - csize);
      prefix_edges(cp, *blues, delta + 1);
      prefix_edges(cp, *reds, delta - (static_cast<long long>(nbrs.size()) - csize));
    }

  auto secondary = std::make_shared<std::vector<std::vector<Vertex>>>();
  for (int t = 3; t <= chi; ++t) {
    int existing = bld.n;
    std::vector<Vertex> pt = bld.vertices(t * static_cast<int>(delta) + 1);
    for (Vertex p : pt)
      for (Vertex w = 1; w <= static_cast<Vertex>(existing); ++w) bld.edge(p, w);
    for (Vertex p : pt) cover.push_back(p);
    secondary->push_back(std::move(pt));
  }

  ReductionBundle bundle;
  bundle.graph = bld.build();
  bundle.problem = ProblemKind::dc;
  bundle.generator = "dc-vc";
  bundle.delta = static_cast<int>(delta);
  bundle.chi = chi;
  bundle.cover_witness = cover;
  bundle.forest_witness = cover_chain_forest(bld.n, cover);
  const int total_vertices = bld.n;
  bundle.forward_coloring = [layout, vgroups, kappas, lambdas, blues, reds, cpairs, secondary,
                             total_vertices](const std::vector<int>& assignment) {
    std::vector<int> canonical = layout->canonical_choice(assignment);
    Coloring col(static_cast<std::size_t>(total_vertices), 0);
    auto set = [&](Vertex v, int c) { col[static_cast<std::size_t>(v) - 1] = c; };
    for (Vertex v : *blues) set(v, 1);
    for (Vertex v : *reds) set(v, 2);
    for (std::size_t g = 0; g < vgroups->size(); ++g) {
      set((*kappas)[g], 1);
      set((*lambdas)[g], 2);
      for (std::size_t q = 0; q < (*vgroups)[g].size(); ++q)
        set((*vgroups)[g][q], static_cast<int>(q) + 1 == canonical[g] ? 1 : 2);
    }
    for (const auto& [c, cp] : *cpairs) {
      set(c, 1);
      set(cp, 2);
    }
    for (std::size_t t = 0; t < secondary->size(); ++t)
      for (Vertex p : (*secondary)[t]) set(p, static_cast<int>(t) + 3);
    return col;
  };
  put_layout_metadata(bundle, *layout);
  put_count(bundle.metadata, "defect", delta);
  put_count(bundle.metadata, "first_clause_vertex",
            cpairs->empty() ? 0 : (*cpairs)[0].first);
  put_count(bundle.metadata, "cover_size", static_cast<long long>(cover.size()));
  put_count(bundle.metadata, "vertices", total_vertices);
  return bundle;
}

}  // namespace degbound
