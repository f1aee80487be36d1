// Pathwidth hardness generators: CSP satisfiability compiled into bounded
// degree vertex deletion (degree bound 1 and general) and defective coloring
// (defect bound 1 and general) instances, each with a transcribed sweep
// path decomposition and a forward certificate builder.
//
// Vertex ids are assigned in construction order (palette, then row chains,
// then per copy and per constraint column: constraint gadget, then blocks in
// row order), so every generator is a pure function of its inputs.

#include <algorithm>
#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "degbound/reductions.hpp"
#include "degbound/util.hpp"
#include "reductions_internal.hpp"

namespace degbound {

namespace {

using detail::GraphBuilder;
using detail::ScheduleBuilder;
using detail::put_count;

// For every constraint, the index of the satisfying tuple the assignment
// matches; throws when the assignment is malformed or unsatisfying.
std::vector<int> matched_tuples(const CspInstance& csp, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != csp.num_vars())
    throw Error(Errc::invalid_argument, "assignment must give a value for every variable");
  for (int v : f)
    if (v < 1 || v > csp.domain_size())
      throw Error(Errc::invalid_argument, "assignment value out of domain");
  std::vector<int> matched;
  for (const auto& c : csp.constraints()) {
    std::vector<int> restriction;
    restriction.reserve(c.scope.size());
    for (int var : c.scope) restriction.push_back(f[static_cast<std::size_t>(var) - 1]);
    auto it = std::find(c.sat.begin(), c.sat.end(), restriction);
    if (it == c.sat.end())
      throw Error(Errc::invalid_argument, "assignment does not satisfy every constraint");
    matched.push_back(static_cast<int>(it - c.sat.begin()));
  }
  return matched;
}

void require_constraints(const CspInstance& csp) {
  if (csp.constraints().empty())
    throw Error(Errc::invalid_argument, "construction needs at least one constraint");
}

std::vector<int> tuple_sizes(const CspInstance& csp) {
  std::vector<int> s;
  s.reserve(csp.constraints().size());
  for (const auto& c : csp.constraints()) s.push_back(static_cast<int>(c.sat.size()));
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Degree bound 1.  Per copy and constraint: a 3-vertex path per variable
// (chained along each row across columns and copies) plus a clique over the
// satisfying tuples, one leaf per clique vertex, and tuple-value wiring.
// ---------------------------------------------------------------------------

ReductionBundle bdvd_pw_delta1(const CspInstance& csp) {
  if (csp.domain_size() != 3)
    throw Error(Errc::invalid_argument, "degree-1 deletion construction requires domain size 3");
  require_constraints(csp);
  const int n = csp.num_vars();
  const int m = static_cast<int>(csp.constraints().size());
  const int q = csp.arity();
  const int kappa = 2 * n + 1;
  const std::vector<int> sizes = tuple_sizes(csp);
  long long kprime = 0;
  for (int s : sizes) kprime += s - 1 + n;
  const long long budget = static_cast<long long>(kappa) * kprime;

  GraphBuilder bld;
  ScheduleBuilder sched;

  // p[((a*n + i)*m + j)*3 + y] is path vertex y+1 of block (row i, column j,
  // copy a); clique vertex l of column (j, a) is at cliques[a*m+j][l].
  auto path = std::make_shared<std::vector<Vertex>>(
      static_cast<std::size_t>(kappa) * n * m * 3, 0);
  auto cliques = std::make_shared<std::vector<std::vector<Vertex>>>(
      static_cast<std::size_t>(kappa) * m);
  auto p_at = [&](int a, int i, int j, int y) -> Vertex& {
    return (*path)[static_cast<std::size_t>(((a * n + i) * m + j) * 3 + y)];
  };

  std::vector<Vertex> frontier(static_cast<std::size_t>(n), 0);
  auto column_bag = [&](const std::vector<Vertex>& clique, std::initializer_list<Vertex> extra) {
    VertexSet bag = clique;
    for (Vertex f : frontier)
      if (f) bag.push_back(f);
    for (Vertex v : extra) bag.push_back(v);
    sched.bag(std::move(bag));
  };

  for (int a = 0; a < kappa; ++a) {
    for (int j = 0; j < m; ++j) {
      const CspConstraint& con = csp.constraints()[static_cast<std::size_t>(j)];
      const int s = sizes[static_cast<std::size_t>(j)];
      auto& clique = (*cliques)[static_cast<std::size_t>(a * m + j)];
      clique = bld.vertices(s);
      for (int l1 = 0; l1 < s; ++l1)
        for (int l2 = l1 + 1; l2 < s; ++l2) bld.edge(clique[static_cast<std::size_t>(l1)], clique[static_cast<std::size_t>(l2)]);
      std::vector<Vertex> leaves;
      for (int l = 0; l < s; ++l) leaves.push_back(bld.leaf(clique[static_cast<std::size_t>(l)]));
      for (int i = 0; i < n; ++i) {
        for (int y = 0; y < 3; ++y) p_at(a, i, j, y) = bld.vertex();
        bld.edge(p_at(a, i, j, 0), p_at(a, i, j, 1));
        bld.edge(p_at(a, i, j, 1), p_at(a, i, j, 2));
        if (j > 0)
          bld.edge(p_at(a, i, j - 1, 2), p_at(a, i, j, 0));
        else if (a > 0)
          bld.edge(p_at(a - 1, i, m - 1, 2), p_at(a, i, j, 0));
      }
      for (int l = 0; l < s; ++l)
        for (int t = 0; t < q; ++t) {
          int var = con.scope[static_cast<std::size_t>(t)];
          int y = con.sat[static_cast<std::size_t>(l)][static_cast<std::size_t>(t)];
          bld.edge(clique[static_cast<std::size_t>(l)], p_at(a, var - 1, j, y - 1));
        }
      // Sweep: the clique stays for the whole column, the row frontier slides
      // from the previous column's third path vertex over this column's path.
      for (int l = 0; l < s; ++l) column_bag(clique, {leaves[static_cast<std::size_t>(l)]});
      for (int i = 0; i < n; ++i) {
        column_bag(clique, {p_at(a, i, j, 0)});
        frontier[static_cast<std::size_t>(i)] = p_at(a, i, j, 0);
        column_bag(clique, {p_at(a, i, j, 1), p_at(a, i, j, 2)});
        frontier[static_cast<std::size_t>(i)] = p_at(a, i, j, 2);
      }
    }
  }

  ReductionBundle bundle;
  bundle.graph = bld.build();
  bundle.problem = ProblemKind::bdvd;
  bundle.generator = "bdvd-pw-d1";
  bundle.delta = 1;
  bundle.budget = budget;
  bundle.path_witness = sched.finish(bld);
  CspInstance source = csp;
  bundle.forward_deletion = [source, path, cliques, n, m, kappa](const std::vector<int>& f) {
    std::vector<int> matched = matched_tuples(source, f);
    auto p_of = [&](int a, int i, int j, int y) {
      return (*path)[static_cast<std::size_t>(((a * n + i) * m + j) * 3 + y)];
    };
    VertexSet s;
    for (int a = 0; a < kappa; ++a)
      for (int j = 0; j < m; ++j) {
        const auto& clique = (*cliques)[static_cast<std::size_t>(a * m + j)];
        for (int l = 0; l < static_cast<int>(clique.size()); ++l)
          if (l != matched[static_cast<std::size_t>(j)]) s.push_back(clique[static_cast<std::size_t>(l)]);
        for (int i = 0; i < n; ++i) s.push_back(p_of(a, i, j, f[static_cast<std::size_t>(i)] - 1));
      }
    return s;
  };
  put_count(bundle.metadata, "kappa", kappa);
  put_count(bundle.metadata, "kprime", kprime);
  put_count(bundle.metadata, "budget", budget);
  put_count(bundle.metadata, "vertices", bld.n);
  put_count(bundle.metadata, "source_vars", n);
  put_count(bundle.metadata, "source_constraints", m);
  return bundle;
}

// ---------------------------------------------------------------------------
// General degree bound delta = B-2 >= 2.  Row chains of shared `a` vertices;
// per block a center b (delta leaves) plus chi_t / q_t / y_t columns (delta-1
// leaves on q_t); constraint cliques whose vertices carry delta leaves; tuple
// values wire either into {b, chi, y} (value <= delta+1) or the left chain
// vertex (value delta+2).
// ---------------------------------------------------------------------------

ReductionBundle bdvd_pw_general(const CspInstance& csp) {
  if (csp.domain_size() < 4)
    throw Error(Errc::invalid_argument, "general deletion construction requires domain size >= 4");
  require_constraints(csp);
  const int n = csp.num_vars();
  const int m = static_cast<int>(csp.constraints().size());
  const int q = csp.arity();
  const int delta = csp.domain_size() - 2;
  const int kappa1 = n + 1;
  const int kappa2 = (2 * delta + 1) * n + 1;
  const int kappa = kappa1 * kappa2;
  const std::vector<int> sizes = tuple_sizes(csp);
  long long k_c = static_cast<long long>(m) * n * (delta + 1);
  for (int s : sizes) k_c += s - 1;
  const long long budget = n + static_cast<long long>(kappa) * k_c;

  GraphBuilder bld;
  ScheduleBuilder sched;

  // Row i's shared chain has m*kappa+1 vertices; block (i, j, a) runs from
  // chain position a*m+j to a*m+j+1.
  auto chains = std::make_shared<std::vector<std::vector<Vertex>>>();
  for (int i = 0; i < n; ++i) chains->push_back(bld.vertices(m * kappa + 1));

  auto cliques = std::make_shared<std::vector<std::vector<Vertex>>>(
      static_cast<std::size_t>(kappa) * m);
  struct Block {
    Vertex b = 0;
    std::vector<Vertex> chi, y, qs;  // delta each
    std::vector<Vertex> b_leaves;
    std::vector<std::vector<Vertex>> q_leaf_runs;
  };
  auto blocks = std::make_shared<std::vector<Block>>(static_cast<std::size_t>(kappa) * m * n);
  auto block_at = [&](int a, int i, int j) -> Block& {
    return (*blocks)[static_cast<std::size_t>((a * m + j) * n + i)];
  };

  std::vector<Vertex> frontier;
  for (int i = 0; i < n; ++i) frontier.push_back((*chains)[static_cast<std::size_t>(i)][0]);
  auto column_bag = [&](const std::vector<Vertex>& clique, std::initializer_list<Vertex> extra) {
    VertexSet bag = clique;
    for (Vertex f : frontier) bag.push_back(f);
    for (Vertex v : extra) bag.push_back(v);
    sched.bag(std::move(bag));
  };

  for (int a = 0; a < kappa; ++a) {
    for (int j = 0; j < m; ++j) {
      const CspConstraint& con = csp.constraints()[static_cast<std::size_t>(j)];
      const int s = sizes[static_cast<std::size_t>(j)];
      auto& clique = (*cliques)[static_cast<std::size_t>(a * m + j)];
      clique = bld.vertices(s);
      for (int l1 = 0; l1 < s; ++l1)
        for (int l2 = l1 + 1; l2 < s; ++l2) bld.edge(clique[static_cast<std::size_t>(l1)], clique[static_cast<std::size_t>(l2)]);
      std::vector<std::vector<Vertex>> clique_leaves;
      for (int l = 0; l < s; ++l) clique_leaves.push_back(bld.leaves(clique[static_cast<std::size_t>(l)], delta));
      for (int i = 0; i < n; ++i) {
        Block& blk = block_at(a, i, j);
        Vertex left = (*chains)[static_cast<std::size_t>(i)][static_cast<std::size_t>(a * m + j)];
        Vertex right = (*chains)[static_cast<std::size_t>(i)][static_cast<std::size_t>(a * m + j + 1)];
        blk.b = bld.vertex();
        bld.edge(left, blk.b);
        bld.edge(right, blk.b);
        std::vector<Vertex> b_leaves = bld.leaves(blk.b, delta);
        for (int t = 0; t < delta; ++t) {
          Vertex chi_t = bld.vertex();
          Vertex q_t = bld.vertex();
          std::vector<Vertex> q_leaves = bld.leaves(q_t, delta - 1);
          Vertex y_t = bld.vertex();
          blk.chi.push_back(chi_t);
          blk.qs.push_back(q_t);
          blk.y.push_back(y_t);
          bld.edge(left, chi_t);
          bld.edge(right, y_t);
          bld.edge(chi_t, q_t);
          bld.edge(y_t, q_t);
          blk.q_leaf_runs.push_back(q_leaves);
        }
        blk.b_leaves = b_leaves;
      }
      for (int l = 0; l < s; ++l)
        for (int t = 0; t < q; ++t) {
          int var = con.scope[static_cast<std::size_t>(t)];
          int value = con.sat[static_cast<std::size_t>(l)][static_cast<std::size_t>(t)];
          const Block& blk = block_at(a, var - 1, j);
          Vertex left = (*chains)[static_cast<std::size_t>(var - 1)][static_cast<std::size_t>(a * m + j)];
          int p = value - 1;  // 0..delta+1
          if (p <= delta) {
            bld.edge(clique[static_cast<std::size_t>(l)], blk.b);
            for (int w = 0; w < p; ++w) bld.edge(clique[static_cast<std::size_t>(l)], blk.chi[static_cast<std::size_t>(w)]);
            for (int w = p; w < delta; ++w) bld.edge(clique[static_cast<std::size_t>(l)], blk.y[static_cast<std::size_t>(w)]);
          } else {
            bld.edge(clique[static_cast<std::size_t>(l)], left);
          }
        }
      // Sweep: clique leaf bags, then per row the block slides from b over
      // the chi/q/y columns while the right chain vertex stays present.
      for (int l = 0; l < s; ++l)
        for (Vertex leaf : clique_leaves[static_cast<std::size_t>(l)]) column_bag(clique, {leaf});
      for (int i = 0; i < n; ++i) {
        Block& blk = block_at(a, i, j);
        Vertex right = (*chains)[static_cast<std::size_t>(i)][static_cast<std::size_t>(a * m + j + 1)];
        column_bag(clique, {blk.b, right});
        for (Vertex leaf : blk.b_leaves) column_bag(clique, {blk.b, right, leaf});
        for (int t = 0; t < delta; ++t) {
          column_bag(clique, {right, blk.chi[static_cast<std::size_t>(t)], blk.qs[static_cast<std::size_t>(t)]});
          for (Vertex leaf : blk.q_leaf_runs[static_cast<std::size_t>(t)])
            column_bag(clique, {right, blk.qs[static_cast<std::size_t>(t)], leaf});
          column_bag(clique, {right, blk.qs[static_cast<std::size_t>(t)], blk.y[static_cast<std::size_t>(t)]});
        }
        frontier[static_cast<std::size_t>(i)] = right;
      }
    }
  }

  ReductionBundle bundle;
  bundle.graph = bld.build();
  bundle.problem = ProblemKind::bdvd;
  bundle.generator = "bdvd-pw";
  bundle.delta = delta;
  bundle.budget = budget;
  bundle.path_witness = sched.finish(bld);
  CspInstance source = csp;
  bundle.forward_deletion = [source, chains, cliques, blocks, n, m, kappa, delta](const std::vector<int>& f) {
    std::vector<int> matched = matched_tuples(source, f);
    VertexSet s;
    for (int i = 0; i < n; ++i) {
      int p = f[static_cast<std::size_t>(i)] - 1;
      if (p == delta + 1) {
        for (Vertex v : (*chains)[static_cast<std::size_t>(i)]) s.push_back(v);
        for (int a = 0; a < kappa; ++a)
          for (int j = 0; j < m; ++j)
            for (Vertex v : (*blocks)[static_cast<std::size_t>((a * m + j) * n + i)].qs) s.push_back(v);
      } else {
        for (int a = 0; a < kappa; ++a)
          for (int j = 0; j < m; ++j) {
            const auto& blk = (*blocks)[static_cast<std::size_t>((a * m + j) * n + i)];
            s.push_back(blk.b);
            for (int w = 0; w < p; ++w) s.push_back(blk.chi[static_cast<std::size_t>(w)]);
            for (int w = p; w < delta; ++w) s.push_back(blk.y[static_cast<std::size_t>(w)]);
          }
      }
    }
    for (int a = 0; a < kappa; ++a)
      for (int j = 0; j < m; ++j) {
        const auto& clique = (*cliques)[static_cast<std::size_t>(a * m + j)];
        for (int l = 0; l < static_cast<int>(clique.size()); ++l)
          if (l != matched[static_cast<std::size_t>(j)]) s.push_back(clique[static_cast<std::size_t>(l)]);
      }
    return s;
  };
  put_count(bundle.metadata, "kappa1", kappa1);
  put_count(bundle.metadata, "kappa2", kappa2);
  put_count(bundle.metadata, "kappa", kappa);
  put_count(bundle.metadata, "k_c", k_c);
  put_count(bundle.metadata, "budget", budget);
  put_count(bundle.metadata, "vertices", bld.n);
  return bundle;
}

// ---------------------------------------------------------------------------
// Defective coloring constructions.  Both share a palette clique, per-row
// chains of equal-colored vertices, and constraint gadgets made of
// (r_z, k_z, v_z) triples; they differ in the block shape and the wiring
// decode.  Colors, like domain values, are 1-based.
// ---------------------------------------------------------------------------

namespace {

// Contract gadgets instantiated once per construction; Gadget objects must
// stay at stable addresses because splices keep pointers into the kit.
struct DcKit {
  int chi = 0;
  int delta = 0;
  Gadget equal, differ;         // Q(u1,u2), D(u1,u2,delta+1)
  Gadget near_equal;            // D(u1,u2,delta-1), general construction only
  std::vector<Gadget> excl;     // excl[c-1] forbids u2 = c when u1 = 1
  std::vector<Gadget> impl;     // impl[c-1] forces u2 = c when u1 = 1
  Gadget palette_triple;        // P(u1,u2,u3), chi >= 3 only
  bool has_near_equal = false;
  bool has_palette_triple = false;
};

std::shared_ptr<DcKit> make_dc_kit(int chi, int delta, const GadgetProvider& provider,
                                   bool need_near_equal) {
  auto kit = std::make_shared<DcKit>();
  kit->chi = chi;
  kit->delta = delta;
  kit->equal = equality_gadget(chi, delta, provider);
  kit->differ = difference_gadget(chi, delta, delta + 1, provider);
  if (need_near_equal && delta >= 2) {
    kit->near_equal = difference_gadget(chi, delta, delta - 1, provider);
    kit->has_near_equal = true;
  }
  for (int c = 1; c <= chi; ++c) {
    kit->excl.push_back(exclusion_gadget(chi, delta, 1, c, provider));
    kit->impl.push_back(implication_gadget(chi, delta, 1, c, provider));
  }
  if (chi >= 3) {
    kit->palette_triple = palette_gadget(chi, delta, provider);
    kit->has_palette_triple = true;
  }
  return kit;
}

// Endpoint list for exclusion / implication splices: the two wired vertices
// followed by the full palette.
std::vector<Vertex> pair_with_palette(Vertex u1, Vertex u2, const std::vector<Vertex>& palette) {
  std::vector<Vertex> e{u1, u2};
  e.insert(e.end(), palette.begin(), palette.end());
  return e;
}

struct DcConstraintIds {
  std::vector<Vertex> r, k, v;  // one triple per satisfying tuple
};

// A color different from c, valid for any chi >= 2.
int other_color(int c, int chi) { return c % chi + 1; }

}  // namespace

// ---------------------------------------------------------------------------
// Defect bound 1, domain size 2*chi.  Block per (row, column, copy):
// a - x - y - a' path with x,y joined to a private b; D(a,b), Q(a,a').
// Value s <= chi pins the row color via implications on (a, x); value
// s = chi + s' pins color s' on a but excludes it on x, flipping the
// block parity.
// ---------------------------------------------------------------------------

ReductionBundle dc_pw_delta1(const CspInstance& csp, int chi, const GadgetProvider& provider) {
  if (chi < 2) throw Error(Errc::invalid_argument, "defective coloring needs chi >= 2");
  if (csp.domain_size() != 2 * chi)
    throw Error(Errc::invalid_argument, "defect-1 construction requires domain size 2*chi");
  require_constraints(csp);
  const int delta = 1;
  const int n = csp.num_vars();
  const int m = static_cast<int>(csp.constraints().size());
  const int q = csp.arity();
  const int kappa = n + 1;
  const std::vector<int> sizes = tuple_sizes(csp);
  auto kit = make_dc_kit(chi, delta, provider, /*need_near_equal=*/false);

  GraphBuilder bld;
  ScheduleBuilder sched;

  auto palette = std::make_shared<std::vector<Vertex>>(bld.vertices(chi));
  for (int c1 = 0; c1 < chi; ++c1)
    for (int c2 = c1 + 1; c2 < chi; ++c2)
      bld.edge((*palette)[static_cast<std::size_t>(c1)], (*palette)[static_cast<std::size_t>(c2)]);
  auto palette_leaves = std::make_shared<std::vector<Vertex>>();
  sched.bag(*palette);
  for (int c = 0; c < chi; ++c) {
    Vertex leaf = bld.leaf((*palette)[static_cast<std::size_t>(c)]);
    palette_leaves->push_back(leaf);
    VertexSet bag = *palette;
    bag.push_back(leaf);
    sched.bag(std::move(bag));
    sched.attach(bld, kit->equal, {(*palette)[static_cast<std::size_t>(c)], leaf});
  }

  auto chains = std::make_shared<std::vector<std::vector<Vertex>>>();
  for (int i = 0; i < n; ++i) chains->push_back(bld.vertices(m * kappa + 1));

  struct D1Block {
    Vertex x = 0, y = 0, b = 0;
  };
  auto blocks = std::make_shared<std::vector<D1Block>>(static_cast<std::size_t>(kappa) * m * n);
  auto constraint_ids = std::make_shared<std::vector<DcConstraintIds>>(
      static_cast<std::size_t>(kappa) * m);

  std::vector<Vertex> frontier;
  for (int i = 0; i < n; ++i) frontier.push_back((*chains)[static_cast<std::size_t>(i)][0]);
  // Sliding bag contents beyond the palette and the row frontier: the scope
  // rows' x vertices for the whole column plus the selector vertices seen so
  // far.  Wiring a selector the moment it enters keeps the DP tables over
  // these bags small: a second selected tuple contradicts an already-attached
  // implication instead of surviving until the row sweep.
  std::vector<Vertex> held;
  auto column_bag = [&](std::initializer_list<Vertex> extra) {
    VertexSet bag = *palette;
    bag.insert(bag.end(), held.begin(), held.end());
    for (Vertex f : frontier) bag.push_back(f);
    for (Vertex v : extra) bag.push_back(v);
    sched.bag(std::move(bag));
  };

  for (int a = 0; a < kappa; ++a) {
    for (int j = 0; j < m; ++j) {
      const CspConstraint& con = csp.constraints()[static_cast<std::size_t>(j)];
      const int s = sizes[static_cast<std::size_t>(j)];
      DcConstraintIds& ids = (*constraint_ids)[static_cast<std::size_t>(a * m + j)];
      ids.r = bld.vertices(s);
      ids.k = bld.vertices(s);
      ids.v = bld.vertices(s);
      for (int z = 0; z < s; ++z) {
        bld.edge(ids.k[static_cast<std::size_t>(z)], ids.r[static_cast<std::size_t>(z)]);
        bld.edge(ids.k[static_cast<std::size_t>(z)], ids.v[static_cast<std::size_t>(z)]);
      }
      for (int i = 0; i < n; ++i) {
        D1Block& blk = (*blocks)[static_cast<std::size_t>((a * m + j) * n + i)];
        Vertex left = (*chains)[static_cast<std::size_t>(i)][static_cast<std::size_t>(a * m + j)];
        Vertex right = (*chains)[static_cast<std::size_t>(i)][static_cast<std::size_t>(a * m + j + 1)];
        blk.x = bld.vertex();
        blk.y = bld.vertex();
        blk.b = bld.vertex();
        bld.edge(left, blk.x);
        bld.edge(blk.x, blk.y);
        bld.edge(blk.y, right);
        bld.edge(blk.x, blk.b);
        bld.edge(blk.y, blk.b);
      }
      held.clear();
      for (int t = 0; t < q; ++t)
        held.push_back(
            (*blocks)[static_cast<std::size_t>((a * m + j) * n + con.scope[static_cast<std::size_t>(t)] - 1)].x);
      // Constraint sweep bags: selector vertices accumulate, (r_z, k_z,
      // r_{z+1}) slides, and each tuple's row wiring attaches at its step.
      for (int z = 0; z < s; ++z) {
        held.push_back(ids.v[static_cast<std::size_t>(z)]);
        if (z + 1 < s)
          column_bag({ids.r[static_cast<std::size_t>(z)], ids.k[static_cast<std::size_t>(z)],
                      ids.r[static_cast<std::size_t>(z + 1)]});
        else
          column_bag({ids.r[static_cast<std::size_t>(z)], ids.k[static_cast<std::size_t>(z)]});
        if (z == 0) sched.attach(bld, kit->equal, {(*palette)[1], ids.r[0]});
        if (z + 1 < s)
          sched.attach(bld, kit->differ,
                       {ids.k[static_cast<std::size_t>(z)], ids.r[static_cast<std::size_t>(z + 1)]});
        if (z == s - 1) sched.attach(bld, kit->equal, {(*palette)[1], ids.k[static_cast<std::size_t>(z)]});
        if (kit->has_palette_triple) {
          if (z >= 1)
            sched.attach(bld, kit->palette_triple,
                         {(*palette)[0], (*palette)[1], ids.r[static_cast<std::size_t>(z)]});
          sched.attach(bld, kit->palette_triple,
                       {(*palette)[0], (*palette)[1], ids.v[static_cast<std::size_t>(z)]});
          if (z < s - 1)
            sched.attach(bld, kit->palette_triple,
                         {(*palette)[0], (*palette)[1], ids.k[static_cast<std::size_t>(z)]});
        }
        for (int t = 0; t < q; ++t) {
          int i = con.scope[static_cast<std::size_t>(t)] - 1;
          const D1Block& blk = (*blocks)[static_cast<std::size_t>((a * m + j) * n + i)];
          Vertex left = (*chains)[static_cast<std::size_t>(i)][static_cast<std::size_t>(a * m + j)];
          int value = con.sat[static_cast<std::size_t>(z)][static_cast<std::size_t>(t)];
          Vertex vl = ids.v[static_cast<std::size_t>(z)];
          if (value <= chi) {
            sched.attach(bld, kit->impl[static_cast<std::size_t>(value - 1)],
                         pair_with_palette(vl, left, *palette));
            sched.attach(bld, kit->impl[static_cast<std::size_t>(value - 1)],
                         pair_with_palette(vl, blk.x, *palette));
          } else {
            int sp = value - chi;
            sched.attach(bld, kit->impl[static_cast<std::size_t>(sp - 1)],
                         pair_with_palette(vl, left, *palette));
            sched.attach(bld, kit->excl[static_cast<std::size_t>(sp - 1)],
                         pair_with_palette(vl, blk.x, *palette));
          }
        }
      }
      // Selector vertices leave; pending scope x vertices stay until their row.
      held.resize(static_cast<std::size_t>(q));
      // Block sweep per row.
      for (int i = 0; i < n; ++i) {
        D1Block& blk = (*blocks)[static_cast<std::size_t>((a * m + j) * n + i)];
        Vertex left = (*chains)[static_cast<std::size_t>(i)][static_cast<std::size_t>(a * m + j)];
        Vertex right = (*chains)[static_cast<std::size_t>(i)][static_cast<std::size_t>(a * m + j + 1)];
        column_bag({blk.x});
        column_bag({blk.x, blk.y, blk.b, right});
        sched.attach(bld, kit->differ, {left, blk.b});
        sched.attach(bld, kit->equal, {left, right});
        if (kit->has_palette_triple) {
          sched.attach(bld, kit->palette_triple, {left, blk.b, blk.x});
          sched.attach(bld, kit->palette_triple, {right, blk.b, blk.y});
        }
        held.erase(std::remove(held.begin(), held.end(), blk.x), held.end());
        frontier[static_cast<std::size_t>(i)] = right;
      }
    }
  }

  ReductionBundle bundle;
  bundle.graph = bld.build();
  bundle.problem = ProblemKind::dc;
  bundle.generator = "dc-pw-d1";
  bundle.delta = delta;
  bundle.chi = chi;
  bundle.budget = 0;
  bundle.path_witness = sched.finish(bld);
  CspInstance source = csp;
  auto builder = std::make_shared<GraphBuilder>(std::move(bld));
  bundle.forward_coloring = [source, builder, kit, palette, palette_leaves, chains, blocks,
                             constraint_ids, n, m, kappa, chi](const std::vector<int>& f) {
    std::vector<int> matched = matched_tuples(source, f);
    Coloring col(static_cast<std::size_t>(builder->n), 0);
    auto set = [&](Vertex v, int c) { col[static_cast<std::size_t>(v) - 1] = c; };
    for (int c = 0; c < chi; ++c) {
      set((*palette)[static_cast<std::size_t>(c)], c + 1);
      set((*palette_leaves)[static_cast<std::size_t>(c)], c + 1);
    }
    for (int i = 0; i < n; ++i) {
      int value = f[static_cast<std::size_t>(i)];
      int k = value <= chi ? value : value - chi;
      int k2 = other_color(k, chi);
      for (Vertex v : (*chains)[static_cast<std::size_t>(i)]) set(v, k);
      for (int a = 0; a < kappa; ++a)
        for (int j = 0; j < m; ++j) {
          const D1Block& blk = (*blocks)[static_cast<std::size_t>((a * m + j) * n + i)];
          set(blk.b, k2);
          if (value <= chi) {
            set(blk.x, k);
            set(blk.y, k2);
          } else {
            set(blk.x, k2);
            set(blk.y, k);
          }
        }
    }
    for (int a = 0; a < kappa; ++a)
      for (int j = 0; j < m; ++j) {
        const DcConstraintIds& ids = (*constraint_ids)[static_cast<std::size_t>(a * m + j)];
        const int l_star = matched[static_cast<std::size_t>(j)];
        for (int z = 0; z < static_cast<int>(ids.v.size()); ++z) {
          set(ids.v[static_cast<std::size_t>(z)], z == l_star ? 1 : 2);
          set(ids.k[static_cast<std::size_t>(z)], z < l_star ? 1 : 2);
          set(ids.r[static_cast<std::size_t>(z)], z <= l_star ? 2 : 1);
        }
      }
    detail::color_interiors(*builder, col);
    return col;
  };
  put_count(bundle.metadata, "kappa", kappa);
  put_count(bundle.metadata, "vertices", builder->n);
  put_count(bundle.metadata, "source_vars", n);
  put_count(bundle.metadata, "source_constraints", m);
  return bundle;
}

// ---------------------------------------------------------------------------
// General defect bound delta >= 2, domain size chi*(delta+1).  Block per
// (row, column, copy): chain vertices a, a' with Q(a,b2), Q(b2,a'),
// D(b1,b2); columns chi_t adjacent to a and y_t adjacent to a', all joined
// to b1 and b2.  Value (k-1)*(delta+1) + d + 1 pins row color k with d of
// the chi columns sharing it.
// ---------------------------------------------------------------------------

ReductionBundle dc_pw_general(const CspInstance& csp, int chi, int delta,
                              const GadgetProvider& provider) {
  if (chi < 2) throw Error(Errc::invalid_argument, "defective coloring needs chi >= 2");
  if (delta < 2)
    throw Error(Errc::invalid_argument, "general defect construction requires delta >= 2");
  if (csp.domain_size() != chi * (delta + 1))
    throw Error(Errc::invalid_argument, "general defect construction requires domain size chi*(delta+1)");
  require_constraints(csp);
  const int n = csp.num_vars();
  const int m = static_cast<int>(csp.constraints().size());
  const int q = csp.arity();
  const int kappa = n * delta + 1;
  const std::vector<int> sizes = tuple_sizes(csp);
  auto kit = make_dc_kit(chi, delta, provider, /*need_near_equal=*/true);

  GraphBuilder bld;
  ScheduleBuilder sched;

  auto palette = std::make_shared<std::vector<Vertex>>(bld.vertices(chi));
  for (int c1 = 0; c1 < chi; ++c1)
    for (int c2 = c1 + 1; c2 < chi; ++c2)
      bld.edge((*palette)[static_cast<std::size_t>(c1)], (*palette)[static_cast<std::size_t>(c2)]);
  auto palette_leaves = std::make_shared<std::vector<std::vector<Vertex>>>();
  sched.bag(*palette);
  for (int c = 0; c < chi; ++c) {
    std::vector<Vertex> run;
    for (int t = 0; t < delta; ++t) {
      Vertex leaf = bld.leaf((*palette)[static_cast<std::size_t>(c)]);
      run.push_back(leaf);
      VertexSet bag = *palette;
      bag.push_back(leaf);
      sched.bag(std::move(bag));
      sched.attach(bld, kit->equal, {(*palette)[static_cast<std::size_t>(c)], leaf});
    }
    palette_leaves->push_back(run);
  }

  auto chains = std::make_shared<std::vector<std::vector<Vertex>>>();
  for (int i = 0; i < n; ++i) chains->push_back(bld.vertices(m * kappa + 1));

  struct GBlock {
    Vertex b1 = 0, b2 = 0;
    std::vector<Vertex> chi_cols, y_cols;  // delta each
  };
  auto blocks = std::make_shared<std::vector<GBlock>>(static_cast<std::size_t>(kappa) * m * n);
  auto constraint_ids = std::make_shared<std::vector<DcConstraintIds>>(
      static_cast<std::size_t>(kappa) * m);

  std::vector<Vertex> frontier;
  for (int i = 0; i < n; ++i) frontier.push_back((*chains)[static_cast<std::size_t>(i)][0]);
  // As in the defect-1 sweep: the scope rows' chi columns ride along during
  // the selector chain so each tuple's wiring attaches the moment its
  // selector enters, and the selectors leave before the block sweep.
  std::vector<Vertex> held;
  auto column_bag = [&](std::initializer_list<Vertex> extra) {
    VertexSet bag = *palette;
    bag.insert(bag.end(), held.begin(), held.end());
    for (Vertex f : frontier) bag.push_back(f);
    for (Vertex v : extra) bag.push_back(v);
    sched.bag(std::move(bag));
  };

  for (int a = 0; a < kappa; ++a) {
    for (int j = 0; j < m; ++j) {
      const CspConstraint& con = csp.constraints()[static_cast<std::size_t>(j)];
      const int s = sizes[static_cast<std::size_t>(j)];
      DcConstraintIds& ids = (*constraint_ids)[static_cast<std::size_t>(a * m + j)];
      ids.r = bld.vertices(s);
      ids.k = bld.vertices(s);
      ids.v = bld.vertices(s);
      for (int z = 0; z < s; ++z) {
        bld.edge(ids.k[static_cast<std::size_t>(z)], ids.r[static_cast<std::size_t>(z)]);
        bld.edge(ids.k[static_cast<std::size_t>(z)], ids.v[static_cast<std::size_t>(z)]);
      }
      for (int i = 0; i < n; ++i) {
        GBlock& blk = (*blocks)[static_cast<std::size_t>((a * m + j) * n + i)];
        Vertex left = (*chains)[static_cast<std::size_t>(i)][static_cast<std::size_t>(a * m + j)];
        Vertex right = (*chains)[static_cast<std::size_t>(i)][static_cast<std::size_t>(a * m + j + 1)];
        blk.b1 = bld.vertex();
        blk.b2 = bld.vertex();
        for (int t = 0; t < delta; ++t) {
          Vertex chi_t = bld.vertex();
          Vertex y_t = bld.vertex();
          blk.chi_cols.push_back(chi_t);
          blk.y_cols.push_back(y_t);
          bld.edge(left, chi_t);
          bld.edge(right, y_t);
          bld.edge(blk.b1, chi_t);
          bld.edge(blk.b1, y_t);
          bld.edge(blk.b2, chi_t);
          bld.edge(blk.b2, y_t);
        }
      }
      held.clear();
      for (int t = 0; t < q; ++t) {
        const GBlock& sb =
            (*blocks)[static_cast<std::size_t>((a * m + j) * n + con.scope[static_cast<std::size_t>(t)] - 1)];
        held.insert(held.end(), sb.chi_cols.begin(), sb.chi_cols.end());
      }
      const std::size_t held_scope = held.size();
      for (int z = 0; z < s; ++z) {
        held.push_back(ids.v[static_cast<std::size_t>(z)]);
        if (z + 1 < s)
          column_bag({ids.r[static_cast<std::size_t>(z)], ids.k[static_cast<std::size_t>(z)],
                      ids.r[static_cast<std::size_t>(z + 1)]});
        else
          column_bag({ids.r[static_cast<std::size_t>(z)], ids.k[static_cast<std::size_t>(z)]});
        if (z == 0) sched.attach(bld, kit->equal, {(*palette)[1], ids.r[0]});
        sched.attach(bld, kit->near_equal, {(*palette)[1], ids.k[static_cast<std::size_t>(z)]});
        if (z + 1 < s)
          sched.attach(bld, kit->differ,
                       {ids.k[static_cast<std::size_t>(z)], ids.r[static_cast<std::size_t>(z + 1)]});
        if (z == s - 1) sched.attach(bld, kit->equal, {(*palette)[1], ids.k[static_cast<std::size_t>(z)]});
        if (kit->has_palette_triple) {
          if (z >= 1)
            sched.attach(bld, kit->palette_triple,
                         {(*palette)[0], (*palette)[1], ids.r[static_cast<std::size_t>(z)]});
          sched.attach(bld, kit->palette_triple,
                       {(*palette)[0], (*palette)[1], ids.v[static_cast<std::size_t>(z)]});
          if (z < s - 1)
            sched.attach(bld, kit->palette_triple,
                         {(*palette)[0], (*palette)[1], ids.k[static_cast<std::size_t>(z)]});
        }
        for (int t = 0; t < q; ++t) {
          int i = con.scope[static_cast<std::size_t>(t)] - 1;
          const GBlock& blk = (*blocks)[static_cast<std::size_t>((a * m + j) * n + i)];
          Vertex left = (*chains)[static_cast<std::size_t>(i)][static_cast<std::size_t>(a * m + j)];
          int value = con.sat[static_cast<std::size_t>(z)][static_cast<std::size_t>(t)];
          int k = (value - 1) / (delta + 1) + 1;
          int d = (value - 1) % (delta + 1);
          Vertex vl = ids.v[static_cast<std::size_t>(z)];
          sched.attach(bld, kit->impl[static_cast<std::size_t>(k - 1)],
                       pair_with_palette(vl, left, *palette));
          for (int tt = 0; tt < delta; ++tt) {
            Vertex chi_t = blk.chi_cols[static_cast<std::size_t>(tt)];
            if (tt < d)
              sched.attach(bld, kit->impl[static_cast<std::size_t>(k - 1)],
                           pair_with_palette(vl, chi_t, *palette));
            else
              sched.attach(bld, kit->excl[static_cast<std::size_t>(k - 1)],
                           pair_with_palette(vl, chi_t, *palette));
          }
        }
      }
      // Selectors leave; pending scope chi columns stay until their row.
      held.resize(held_scope);
      for (int i = 0; i < n; ++i) {
        GBlock& blk = (*blocks)[static_cast<std::size_t>((a * m + j) * n + i)];
        Vertex left = (*chains)[static_cast<std::size_t>(i)][static_cast<std::size_t>(a * m + j)];
        Vertex right = (*chains)[static_cast<std::size_t>(i)][static_cast<std::size_t>(a * m + j + 1)];
        column_bag({blk.b1, blk.b2, right});
        sched.attach(bld, kit->equal, {left, blk.b2});
        sched.attach(bld, kit->equal, {blk.b2, right});
        sched.attach(bld, kit->differ, {blk.b1, blk.b2});
        for (int t = 0; t < delta; ++t) {
          Vertex chi_t = blk.chi_cols[static_cast<std::size_t>(t)];
          column_bag({blk.b1, blk.b2, right, chi_t});
          if (kit->has_palette_triple)
            sched.attach(bld, kit->palette_triple, {blk.b1, blk.b2, chi_t});
        }
        for (int t = 0; t < delta; ++t) {
          Vertex y_t = blk.y_cols[static_cast<std::size_t>(t)];
          column_bag({blk.b1, blk.b2, right, y_t});
          if (kit->has_palette_triple)
            sched.attach(bld, kit->palette_triple, {blk.b1, blk.b2, y_t});
        }
        for (Vertex c : blk.chi_cols)
          held.erase(std::remove(held.begin(), held.end(), c), held.end());
        frontier[static_cast<std::size_t>(i)] = right;
      }
    }
  }

  ReductionBundle bundle;
  bundle.graph = bld.build();
  bundle.problem = ProblemKind::dc;
  bundle.generator = "dc-pw";
  bundle.delta = delta;
  bundle.chi = chi;
  bundle.budget = 0;
  bundle.path_witness = sched.finish(bld);
  CspInstance source = csp;
  auto builder = std::make_shared<GraphBuilder>(std::move(bld));
  bundle.forward_coloring = [source, builder, kit, palette, palette_leaves, chains, blocks,
                             constraint_ids, n, m, kappa, chi, delta](const std::vector<int>& f) {
    std::vector<int> matched = matched_tuples(source, f);
    Coloring col(static_cast<std::size_t>(builder->n), 0);
    auto set = [&](Vertex v, int c) { col[static_cast<std::size_t>(v) - 1] = c; };
    for (int c = 0; c < chi; ++c) {
      set((*palette)[static_cast<std::size_t>(c)], c + 1);
      for (Vertex leaf : (*palette_leaves)[static_cast<std::size_t>(c)]) set(leaf, c + 1);
    }
    for (int i = 0; i < n; ++i) {
      int value = f[static_cast<std::size_t>(i)];
      int k = (value - 1) / (delta + 1) + 1;
      int d = (value - 1) % (delta + 1);
      int k2 = other_color(k, chi);
      for (Vertex v : (*chains)[static_cast<std::size_t>(i)]) set(v, k);
      for (int a = 0; a < kappa; ++a)
        for (int j = 0; j < m; ++j) {
          const GBlock& blk = (*blocks)[static_cast<std::size_t>((a * m + j) * n + i)];
          set(blk.b1, k2);
          set(blk.b2, k);
          for (int t = 0; t < delta; ++t) {
            set(blk.chi_cols[static_cast<std::size_t>(t)], t < d ? k : k2);
            set(blk.y_cols[static_cast<std::size_t>(t)], t < d ? k2 : k);
          }
        }
    }
    for (int a = 0; a < kappa; ++a)
      for (int j = 0; j < m; ++j) {
        const DcConstraintIds& ids = (*constraint_ids)[static_cast<std::size_t>(a * m + j)];
        const int l_star = matched[static_cast<std::size_t>(j)];
        for (int z = 0; z < static_cast<int>(ids.v.size()); ++z) {
          set(ids.v[static_cast<std::size_t>(z)], z == l_star ? 1 : 2);
          set(ids.k[static_cast<std::size_t>(z)], z < l_star ? 1 : 2);
          set(ids.r[static_cast<std::size_t>(z)], z <= l_star ? 2 : 1);
        }
      }
    detail::color_interiors(*builder, col);
    return col;
  };
  put_count(bundle.metadata, "kappa", kappa);
  put_count(bundle.metadata, "vertices", builder->n);
  put_count(bundle.metadata, "source_vars", n);
  put_count(bundle.metadata, "source_constraints", m);
  return bundle;
}

}  // namespace degbound
