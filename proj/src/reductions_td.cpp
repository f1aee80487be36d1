// Tree-depth hardness generators: multicolored clique with parts of equal
// size compiled into bounded degree vertex deletion / defective coloring
// instances whose elimination-forest witnesses have depth linear in the
// number of parts.
//
// The input graph has k parts of n vertices (vertex (i-1)*n + j is position j
// of part i), a self-loop on every vertex and no other intra-part edges.  The
// recursion covers the k x k grid of part pairs with a balanced quadtree:
// a leaf handles one ordered pair (i, i') and carries one choice-gadget
// instance per side plus one edge gadget per input edge between the parts
// (loops for i = i'); a composite node carries fresh "original" instances for
// its row and column ranges and copy gadgets tying them to the designated
// instances of the two children covering each part.

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "degbound/gadgets.hpp"
#include "degbound/reductions.hpp"
#include "degbound/util.hpp"
#include "reductions_internal.hpp"

namespace degbound {

namespace {

using detail::GraphBuilder;
using detail::put_count;

bool power_of_two(int k) { return k >= 1 && (k & (k - 1)) == 0; }

// Validated view of a multicolored clique instance.
struct MccView {
  int k = 0;
  int n = 0;
  long long num_edges = 0;  // loops included
  // cross[(i-1)*k + (i2-1)] for i < i2: (position in part i, position in part i2)
  std::vector<std::vector<std::pair<int, int>>> cross;

  int part_of(Vertex v) const { return (static_cast<int>(v) - 1) / n + 1; }
  int pos_of(Vertex v) const { return (static_cast<int>(v) - 1) % n + 1; }

  // Ordered edge list for a leaf handling (i, i2): loops on the diagonal,
  // cross edges oriented so the first position lives in part i.
  std::vector<std::pair<int, int>> leaf_edges(int i, int i2) const {
    std::vector<std::pair<int, int>> out;
    if (i == i2) {
      for (int j = 1; j <= n; ++j) out.emplace_back(j, j);
      return out;
    }
    if (i < i2) return cross[static_cast<std::size_t>((i - 1) * k + (i2 - 1))];
    for (const auto& e : cross[static_cast<std::size_t>((i2 - 1) * k + (i - 1))])
      out.emplace_back(e.second, e.first);
    return out;
  }

  bool has_cross(int i, int j, int i2, int j2) const {
    if (i == i2) return false;
    if (i > i2) return has_cross(i2, j2, i, j);
    const auto& list = cross[static_cast<std::size_t>((i - 1) * k + (i2 - 1))];
    return std::find(list.begin(), list.end(), std::make_pair(j, j2)) != list.end();
  }
};

MccView analyze_mcc(const Graph& g, int k) {
  if (!power_of_two(k) || k < 2)
    throw Error(Errc::invalid_argument, "number of parts must be a power of two, at least 2");
  if (g.num_vertices() % k != 0)
    throw Error(Errc::invalid_argument, "vertex count must split into k equal parts");
  MccView view;
  view.k = k;
  view.n = g.num_vertices() / k;
  view.cross.assign(static_cast<std::size_t>(k) * k, {});
  std::vector<bool> looped(static_cast<std::size_t>(g.num_vertices()), false);
  for (const auto& e : g.edges()) {
    if (e.first == e.second) {
      looped[static_cast<std::size_t>(e.first) - 1] = true;
      continue;
    }
    int i1 = view.part_of(e.first), i2 = view.part_of(e.second);
    if (i1 == i2)
      throw Error(Errc::invalid_argument, "parts must be independent apart from self-loops");
    int j1 = view.pos_of(e.first), j2 = view.pos_of(e.second);
    if (i1 < i2)
      view.cross[static_cast<std::size_t>((i1 - 1) * k + (i2 - 1))].emplace_back(j1, j2);
    else
      view.cross[static_cast<std::size_t>((i2 - 1) * k + (i1 - 1))].emplace_back(j2, j1);
  }
  for (bool b : looped)
    if (!b) throw Error(Errc::invalid_argument, "every vertex needs a self-loop");
  for (auto& list : view.cross) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  long long cross_total = 0;
  for (const auto& list : view.cross) cross_total += static_cast<long long>(list.size());
  view.num_edges = cross_total + static_cast<long long>(k) * view.n;
  return view;
}

// Checks that the certificate (one 1-based position per part) induces a
// multicolored clique; loops exist for every vertex by validation.
void check_clique_certificate(const MccView& view, const std::vector<int>& pick) {
  if (static_cast<int>(pick.size()) != view.k)
    throw Error(Errc::invalid_argument, "certificate must pick one position per part");
  for (int j : pick)
    if (j < 1 || j > view.n)
      throw Error(Errc::invalid_argument, "certificate position out of range");
  for (int i = 1; i <= view.k; ++i)
    for (int i2 = i + 1; i2 <= view.k; ++i2)
      if (!view.has_cross(i, pick[static_cast<std::size_t>(i) - 1], i2,
                          pick[static_cast<std::size_t>(i2) - 1]))
        throw Error(Errc::invalid_argument, "certificate positions are not pairwise adjacent");
  }

// Shared id records for the forward builders.
struct TdChoice {
  int part = 0;
  std::vector<Vertex> vh, vl;
};

struct TdEdgeGadget {
  int part_row = 0, part_col = 0;
  int j1 = 0, j2 = 0;
  Vertex r = 0;                // deletion variant only
  std::vector<Vertex> cs, ss;  // c vertices (2n or 1) and s vertices (2n)
  std::vector<Vertex> c_leaves;
};

// ---------------------------------------------------------------------------
// Bounded degree vertex deletion, delta = n^3.
// ---------------------------------------------------------------------------

struct BdvdTdState {
  MccView view;
  GraphBuilder bld;
  std::vector<int> parent;  // forest parents, 0 = root
  std::vector<TdChoice> choices;
  std::vector<TdEdgeGadget> egs;
  long long delta = 0;
  long long copy_gadgets = 0;

  void par(Vertex v, Vertex p) {
    if (static_cast<int>(parent.size()) < bld.n) parent.resize(static_cast<std::size_t>(bld.n), -1);
    parent[static_cast<std::size_t>(v) - 1] = static_cast<int>(p);
  }

  std::vector<Vertex> padded_leaves(Vertex owner, long long count) {
    if (count < 0)
      throw Error(Errc::invalid_argument, "degree budget exceeded; input graph too dense");
    std::vector<Vertex> out = bld.leaves(owner, static_cast<int>(count));
    for (Vertex leaf : out) par(leaf, owner);
    return out;
  }

  // Choice instance: pairs (v^h_j, v^l_j) with an anchor q_j adjacent to both
  // and padded to remaining degree delta.  Forest: q_j roots (parented by the
  // caller) with the pair and the padding as children.
  int make_choice(int part, std::vector<Vertex>* roots) {
    TdChoice ci;
    ci.part = part;
    const int n = view.n;
    ci.vh = bld.vertices(n);
    ci.vl = bld.vertices(n);
    for (int j = 0; j < n; ++j) {
      Vertex q = bld.vertex();
      bld.edge(q, ci.vh[static_cast<std::size_t>(j)]);
      bld.edge(q, ci.vl[static_cast<std::size_t>(j)]);
      par(ci.vh[static_cast<std::size_t>(j)], q);
      par(ci.vl[static_cast<std::size_t>(j)], q);
      padded_leaves(q, delta - 1);
      roots->push_back(q);
    }
    choices.push_back(ci);
    return static_cast<int>(choices.size()) - 1;
  }

  // Copy gadget tying two instances of the same part to equal selections:
  // g1 watches the low side of I1 and the high side of I2, g2 the reverse.
  // Both land on the caller's chain.
  void make_copy(int inst1, int inst2, std::vector<Vertex>* chain) {
    const TdChoice& a = choices[static_cast<std::size_t>(inst1)];
    const TdChoice& b = choices[static_cast<std::size_t>(inst2)];
    Vertex g1 = bld.vertex();
    Vertex g2 = bld.vertex();
    for (int j = 0; j < view.n; ++j) {
      bld.edge(g1, a.vl[static_cast<std::size_t>(j)]);
      bld.edge(g1, b.vh[static_cast<std::size_t>(j)]);
      bld.edge(g2, b.vl[static_cast<std::size_t>(j)]);
      bld.edge(g2, a.vh[static_cast<std::size_t>(j)]);
    }
    padded_leaves(g1, delta - view.n);
    padded_leaves(g2, delta - view.n);
    chain->push_back(g1);
    chain->push_back(g2);
    ++copy_gadgets;
  }

  struct NodeResult {
    std::map<int, int> row_inst, col_inst;  // part -> choice index
    Vertex root = 0;
  };

  NodeResult build_leaf(int i, int i2) {
    NodeResult res;
    std::vector<Vertex> choice_roots;
    int row = make_choice(i, &choice_roots);
    int col = make_choice(i2, &choice_roots);
    Vertex ll = bld.vertex(), lh = bld.vertex(), rl = bld.vertex(), rh = bld.vertex();
    const int n = view.n;
    for (int j = 0; j < n; ++j) {
      bld.edge(ll, choices[static_cast<std::size_t>(row)].vl[static_cast<std::size_t>(j)]);
      bld.edge(lh, choices[static_cast<std::size_t>(row)].vh[static_cast<std::size_t>(j)]);
      bld.edge(rl, choices[static_cast<std::size_t>(col)].vl[static_cast<std::size_t>(j)]);
      bld.edge(rh, choices[static_cast<std::size_t>(col)].vh[static_cast<std::size_t>(j)]);
    }
    long long tau_ll = n, tau_lh = n, tau_rl = n, tau_rh = n;
    for (const auto& e : view.leaf_edges(i, i2)) {
      TdEdgeGadget eg;
      eg.part_row = i;
      eg.part_col = i2;
      eg.j1 = e.first;
      eg.j2 = e.second;
      eg.r = bld.vertex();
      par(eg.r, rh);
      for (int col_idx = 0; col_idx < 2; ++col_idx)
        for (int t = 1; t <= n; ++t) {
          Vertex c = bld.vertex();
          Vertex s = bld.vertex();
          bld.edge(eg.r, c);
          bld.edge(c, s);
          par(c, eg.r);
          par(s, c);
          auto leaves = padded_leaves(c, delta);
          eg.c_leaves.insert(eg.c_leaves.end(), leaves.begin(), leaves.end());
          eg.cs.push_back(c);
          eg.ss.push_back(s);
          if (col_idx == 0) {
            bld.edge(t <= e.first ? ll : lh, s);
            (t <= e.first ? tau_ll : tau_lh) += 1;
          } else {
            bld.edge(t <= e.second ? rl : rh, s);
            (t <= e.second ? tau_rl : tau_rh) += 1;
          }
        }
      egs.push_back(std::move(eg));
    }
    padded_leaves(ll, delta - tau_ll);
    padded_leaves(lh, delta - tau_lh);
    padded_leaves(rl, delta - tau_rl);
    padded_leaves(rh, delta - tau_rh);
    par(lh, ll);
    par(rl, lh);
    par(rh, rl);
    for (Vertex q : choice_roots) par(q, rh);
    res.row_inst[i] = row;
    res.col_inst[i2] = col;
    res.root = ll;
    return res;
  }

  NodeResult build_node(int rlo, int rhi, int clo, int chi) {
    if (rlo == rhi) return build_leaf(rlo, clo);
    NodeResult res;
    const int half = (rhi - rlo + 1) / 2;
    std::vector<Vertex> choice_roots;
    for (int i = rlo; i <= rhi; ++i) res.row_inst[i] = make_choice(i, &choice_roots);
    for (int i = clo; i <= chi; ++i) res.col_inst[i] = make_choice(i, &choice_roots);
    NodeResult kids[4] = {
        build_node(rlo, rlo + half - 1, clo, clo + half - 1),
        build_node(rlo, rlo + half - 1, clo + half, chi),
        build_node(rlo + half, rhi, clo, clo + half - 1),
        build_node(rlo + half, rhi, clo + half, chi),
    };
    std::vector<Vertex> chain;
    for (const NodeResult& kid : kids) {
      for (const auto& [part, inst] : kid.row_inst)
        if (res.row_inst.count(part)) make_copy(res.row_inst[part], inst, &chain);
      for (const auto& [part, inst] : kid.col_inst)
        if (res.col_inst.count(part)) make_copy(res.col_inst[part], inst, &chain);
    }
    for (std::size_t t = 1; t < chain.size(); ++t) par(chain[t], chain[t - 1]);
    Vertex end = chain.back();
    for (Vertex q : choice_roots) par(q, end);
    for (const NodeResult& kid : kids) par(kid.root, end);
    // Only the originals stay designated for the parent.
    res.root = chain.front();
    return res;
  }
};

}  // namespace

ReductionBundle bdvd_td(const Graph& mcc, int k) {
  auto state = std::make_shared<BdvdTdState>();
  state->view = analyze_mcc(mcc, k);
  const int n = state->view.n;
  if (n < 2) throw Error(Errc::invalid_argument, "parts need at least 2 vertices");
  state->delta = static_cast<long long>(n) * n * n;

  BdvdTdState::NodeResult top = state->build_node(1, k, 1, k);
  state->par(top.root, 0);
  state->parent.resize(static_cast<std::size_t>(state->bld.n), -1);
  for (int& p : state->parent)
    if (p < 0) throw Error(Errc::invalid_argument, "internal error: unparented vertex");

  const long long beta = 2LL * k * (2 * k - 1);
  const long long instances =
      2 * (state->view.num_edges - static_cast<long long>(k) * n) + static_cast<long long>(k) * n;
  const long long matched = static_cast<long long>(k) * k;  // 2*C(k,2) + k
  const long long budget = static_cast<long long>(n) * beta + 2LL * n * instances + matched;

  ReductionBundle bundle;
  bundle.graph = state->bld.build();
  bundle.problem = ProblemKind::bdvd;
  bundle.generator = "bdvd-td";
  bundle.delta = static_cast<int>(state->delta);
  bundle.budget = budget;
  EliminationForest forest;
  forest.parent = state->parent;
  bundle.forest_witness = forest;
  bundle.forward_deletion = [state, k, n](const std::vector<int>& pick) {
    check_clique_certificate(state->view, pick);
    VertexSet s;
    for (const TdChoice& ci : state->choices) {
      int sel = pick[static_cast<std::size_t>(ci.part) - 1];
      for (int j = 0; j < n; ++j) {
        if (j < sel)
          s.push_back(ci.vh[static_cast<std::size_t>(j)]);
        else
          s.push_back(ci.vl[static_cast<std::size_t>(j)]);
      }
    }
    for (const TdEdgeGadget& eg : state->egs) {
      bool is_matched = eg.j1 == pick[static_cast<std::size_t>(eg.part_row) - 1] &&
                        eg.j2 == pick[static_cast<std::size_t>(eg.part_col) - 1];
      if (is_matched) {
        s.push_back(eg.r);
        for (Vertex v : eg.ss) s.push_back(v);
      } else {
        for (Vertex v : eg.cs) s.push_back(v);
      }
    }
    return s;
  };
  put_count(bundle.metadata, "parts", k);
  put_count(bundle.metadata, "part_size", n);
  put_count(bundle.metadata, "beta", beta);
  put_count(bundle.metadata, "copy_gadgets", state->copy_gadgets);
  put_count(bundle.metadata, "edge_instances", instances);
  put_count(bundle.metadata, "budget", budget);
  put_count(bundle.metadata, "vertices", state->bld.n);
  return bundle;
}

// ---------------------------------------------------------------------------
// Defective coloring, delta = number of unmatched edge-gadget instances.
// Colors: 1 follows palette vertex A, 2 follows palette vertex B.
// ---------------------------------------------------------------------------

namespace {

struct DcTdState {
  MccView view;
  GraphBuilder bld;
  std::vector<int> parent;
  std::vector<TdChoice> choices;
  std::vector<TdEdgeGadget> egs;
  long long delta = 0;
  long long copy_gadgets = 0;
  int chi = 2;
  Gadget equal;
  Gadget triple;
  bool has_triple = false;
  Vertex pa = 0, pb = 0, u = 0;
  std::vector<Vertex> pa_leaves, pb_leaves;
  struct FPair {
    Vertex fa = 0, fb = 0;
    std::vector<Vertex> fa_leaves, fb_leaves;
  };
  std::vector<FPair> fpairs;            // one per choice instance
  std::vector<Vertex> gs;               // copy vertices, all color 1
  std::vector<std::vector<Vertex>> g_leaves;
  std::vector<Vertex> quartets;         // color 1
  std::vector<std::vector<Vertex>> quartet_leaves;

  void par(Vertex v, Vertex p) {
    if (static_cast<int>(parent.size()) < bld.n) parent.resize(static_cast<std::size_t>(bld.n), -1);
    parent[static_cast<std::size_t>(v) - 1] = static_cast<int>(p);
  }

  // Splices a contract gadget and parents its interior under `anchor`:
  // flat children when the interior is edgeless, a chain otherwise.
  void splice_anchored(const Gadget& g, std::vector<Vertex> endpoints, Vertex anchor) {
    std::size_t idx = bld.splice(g, std::move(endpoints));
    const auto& inst = bld.instances[idx];
    bool linked = false;
    for (const auto& [a, b] : g.edges)
      if (a > 0 && b > 0) linked = true;
    Vertex prev = anchor;
    for (int t = 0; t < g.internals; ++t) {
      Vertex w = inst.first_internal + static_cast<Vertex>(t);
      par(w, linked ? prev : anchor);
      if (linked) prev = w;
    }
  }

  // Leaf pinned to follow `owner` by an equality gadget; forest child of owner.
  Vertex pinned_leaf(Vertex owner, Vertex color_source) {
    Vertex leaf = bld.leaf(owner);
    par(leaf, owner);
    splice_anchored(equal, {color_source, leaf}, leaf);
    return leaf;
  }

  void maybe_triple(Vertex x) {
    if (has_triple) splice_anchored(triple, {pa, pb, x}, x);
  }

  // Choice instance: chain f^A -> f^B with the 2n choice vertices as children
  // of f^B; both f's watch every choice vertex and are pinned to the palette.
  int make_choice(int part, std::vector<Vertex>* roots) {
    TdChoice ci;
    ci.part = part;
    const int n = view.n;
    ci.vh = bld.vertices(n);
    ci.vl = bld.vertices(n);
    FPair fp;
    fp.fa = bld.vertex();
    fp.fb = bld.vertex();
    par(fp.fb, fp.fa);
    for (int j = 0; j < n; ++j) {
      for (Vertex v : {ci.vh[static_cast<std::size_t>(j)], ci.vl[static_cast<std::size_t>(j)]}) {
        bld.edge(fp.fa, v);
        bld.edge(fp.fb, v);
        par(v, fp.fb);
        maybe_triple(v);
      }
    }
    splice_anchored(equal, {pa, fp.fa}, fp.fa);
    splice_anchored(equal, {pb, fp.fb}, fp.fb);
    for (long long t = 0; t < delta - n; ++t) {
      fp.fa_leaves.push_back(pinned_leaf(fp.fa, fp.fa));
      fp.fb_leaves.push_back(pinned_leaf(fp.fb, fp.fb));
    }
    roots->push_back(fp.fa);
    choices.push_back(ci);
    fpairs.push_back(std::move(fp));
    return static_cast<int>(choices.size()) - 1;
  }

  void make_copy(int inst1, int inst2, std::vector<Vertex>* chain) {
    const TdChoice& a = choices[static_cast<std::size_t>(inst1)];
    const TdChoice& b = choices[static_cast<std::size_t>(inst2)];
    for (int side = 0; side < 2; ++side) {
      Vertex g = bld.vertex();
      const TdChoice& low = side == 0 ? a : b;
      const TdChoice& high = side == 0 ? b : a;
      for (int j = 0; j < view.n; ++j) {
        bld.edge(g, low.vl[static_cast<std::size_t>(j)]);
        bld.edge(g, high.vh[static_cast<std::size_t>(j)]);
      }
      splice_anchored(equal, {pa, g}, g);
      std::vector<Vertex> leaves;
      for (long long t = 0; t < delta - view.n; ++t) leaves.push_back(pinned_leaf(g, g));
      gs.push_back(g);
      g_leaves.push_back(std::move(leaves));
      chain->push_back(g);
    }
    ++copy_gadgets;
  }

  struct NodeResult {
    std::map<int, int> row_inst, col_inst;
    Vertex root = 0;
  };

  NodeResult build_leaf(int i, int i2) {
    NodeResult res;
    std::vector<Vertex> choice_roots;
    int row = make_choice(i, &choice_roots);
    int col = make_choice(i2, &choice_roots);
    Vertex ll = bld.vertex(), lh = bld.vertex(), rl = bld.vertex(), rh = bld.vertex();
    const int n = view.n;
    for (int j = 0; j < n; ++j) {
      bld.edge(ll, choices[static_cast<std::size_t>(row)].vl[static_cast<std::size_t>(j)]);
      bld.edge(lh, choices[static_cast<std::size_t>(row)].vh[static_cast<std::size_t>(j)]);
      bld.edge(rl, choices[static_cast<std::size_t>(col)].vl[static_cast<std::size_t>(j)]);
      bld.edge(rh, choices[static_cast<std::size_t>(col)].vh[static_cast<std::size_t>(j)]);
    }
    for (Vertex x : {ll, lh, rl, rh}) {
      splice_anchored(equal, {pa, x}, x);
      std::vector<Vertex> leaves;
      for (long long t = 0; t < delta - n; ++t) leaves.push_back(pinned_leaf(x, pa));
      quartets.push_back(x);
      quartet_leaves.push_back(std::move(leaves));
    }
    for (const auto& e : view.leaf_edges(i, i2)) {
      TdEdgeGadget eg;
      eg.part_row = i;
      eg.part_col = i2;
      eg.j1 = e.first;
      eg.j2 = e.second;
      Vertex c = bld.vertex();
      par(c, rh);
      bld.edge(u, c);
      maybe_triple(c);
      eg.cs.push_back(c);
      for (int col_idx = 0; col_idx < 2; ++col_idx)
        for (int t = 1; t <= n; ++t) {
          Vertex s = bld.vertex();
          bld.edge(c, s);
          par(s, c);
          maybe_triple(s);
          eg.ss.push_back(s);
          if (col_idx == 0)
            bld.edge(t <= e.first ? ll : lh, s);
          else
            bld.edge(t <= e.second ? rl : rh, s);
        }
      for (long long t = 0; t < delta; ++t) eg.c_leaves.push_back(pinned_leaf(c, pb));
      egs.push_back(std::move(eg));
    }
    par(lh, ll);
    par(rl, lh);
    par(rh, rl);
    for (Vertex f : choice_roots) par(f, rh);
    res.row_inst[i] = row;
    res.col_inst[i2] = col;
    res.root = ll;
    return res;
  }

  NodeResult build_node(int rlo, int rhi, int clo, int chi_hi) {
    if (rlo == rhi) return build_leaf(rlo, clo);
    NodeResult res;
    const int half = (rhi - rlo + 1) / 2;
    std::vector<Vertex> choice_roots;
    for (int i = rlo; i <= rhi; ++i) res.row_inst[i] = make_choice(i, &choice_roots);
    for (int i = clo; i <= chi_hi; ++i) res.col_inst[i] = make_choice(i, &choice_roots);
    NodeResult kids[4] = {
        build_node(rlo, rlo + half - 1, clo, clo + half - 1),
        build_node(rlo, rlo + half - 1, clo + half, chi_hi),
        build_node(rlo + half, rhi, clo, clo + half - 1),
        build_node(rlo + half, rhi, clo + half, chi_hi),
    };
    std::vector<Vertex> chain;
    for (const NodeResult& kid : kids) {
      for (const auto& [part, inst] : kid.row_inst)
        if (res.row_inst.count(part)) make_copy(res.row_inst[part], inst, &chain);
      for (const auto& [part, inst] : kid.col_inst)
        if (res.col_inst.count(part)) make_copy(res.col_inst[part], inst, &chain);
    }
    for (std::size_t t = 1; t < chain.size(); ++t) par(chain[t], chain[t - 1]);
    Vertex end = chain.back();
    for (Vertex f : choice_roots) par(f, end);
    for (const NodeResult& kid : kids) par(kid.root, end);
    res.root = chain.front();
    return res;
  }
};

}  // namespace

ReductionBundle dc_td(const Graph& mcc, int k, int chi, const GadgetProvider& provider) {
  if (chi < 2) throw Error(Errc::invalid_argument, "defective coloring needs chi >= 2");
  auto state = std::make_shared<DcTdState>();
  state->view = analyze_mcc(mcc, k);
  const int n = state->view.n;
  const long long instances =
      2 * (state->view.num_edges - static_cast<long long>(k) * n) + static_cast<long long>(k) * n;
  const long long matched = static_cast<long long>(k) * k;
  state->delta = instances - matched;
  if (state->delta < n || state->delta < 4)
    throw Error(Errc::invalid_argument,
                "defect bound (unmatched edge instances) must be at least max(part size, 4); "
                "add more cross edges");
  state->chi = chi;
  state->equal = equality_gadget(chi, static_cast<int>(state->delta), provider);
  if (chi >= 3) {
    state->triple = palette_gadget(chi, static_cast<int>(state->delta), provider);
    state->has_triple = true;
  }

  state->pa = state->bld.vertex();
  state->pb = state->bld.vertex();
  state->bld.edge(state->pa, state->pb);
  state->par(state->pa, 0);
  state->par(state->pb, state->pa);
  state->u = state->bld.vertex();
  state->par(state->u, state->pb);
  state->splice_anchored(state->equal, {state->pa, state->u}, state->u);
  for (long long t = 0; t < state->delta; ++t) {
    state->pa_leaves.push_back(state->pinned_leaf(state->pa, state->pa));
    state->pb_leaves.push_back(state->pinned_leaf(state->pb, state->pb));
  }

  DcTdState::NodeResult top = state->build_node(1, k, 1, k);
  state->par(top.root, state->u);
  state->parent.resize(static_cast<std::size_t>(state->bld.n), -1);
  for (int& p : state->parent)
    if (p < 0) throw Error(Errc::invalid_argument, "internal error: unparented vertex");

  const long long beta = 2LL * k * (2 * k - 1);

  ReductionBundle bundle;
  bundle.graph = state->bld.build();
  bundle.problem = ProblemKind::dc;
  bundle.generator = "dc-td";
  bundle.delta = static_cast<int>(state->delta);
  bundle.chi = chi;
  EliminationForest forest;
  forest.parent = state->parent;
  bundle.forest_witness = forest;
  bundle.forward_coloring = [state, k, n](const std::vector<int>& pick) {
    check_clique_certificate(state->view, pick);
    Coloring col(static_cast<std::size_t>(state->bld.n), 0);
    auto set = [&](Vertex v, int c) { col[static_cast<std::size_t>(v) - 1] = c; };
    set(state->pa, 1);
    set(state->pb, 2);
    for (Vertex v : state->pa_leaves) set(v, 1);
    for (Vertex v : state->pb_leaves) set(v, 2);
    set(state->u, 1);
    for (std::size_t idx = 0; idx < state->choices.size(); ++idx) {
      const TdChoice& ci = state->choices[idx];
      const auto& fp = state->fpairs[idx];
      int sel = pick[static_cast<std::size_t>(ci.part) - 1];
      for (int j = 0; j < n; ++j) {
        set(ci.vh[static_cast<std::size_t>(j)], j < sel ? 1 : 2);
        set(ci.vl[static_cast<std::size_t>(j)], j < sel ? 2 : 1);
      }
      set(fp.fa, 1);
      set(fp.fb, 2);
      for (Vertex v : fp.fa_leaves) set(v, 1);
      for (Vertex v : fp.fb_leaves) set(v, 2);
    }
    for (std::size_t idx = 0; idx < state->gs.size(); ++idx) {
      set(state->gs[idx], 1);
      for (Vertex v : state->g_leaves[idx]) set(v, 1);
    }
    for (std::size_t idx = 0; idx < state->quartets.size(); ++idx) {
      set(state->quartets[idx], 1);
      for (Vertex v : state->quartet_leaves[idx]) set(v, 1);
    }
    for (const TdEdgeGadget& eg : state->egs) {
      bool is_matched = eg.j1 == pick[static_cast<std::size_t>(eg.part_row) - 1] &&
                        eg.j2 == pick[static_cast<std::size_t>(eg.part_col) - 1];
      set(eg.cs[0], is_matched ? 2 : 1);
      for (Vertex s : eg.ss) set(s, is_matched ? 1 : 2);
      for (Vertex v : eg.c_leaves) set(v, 2);
    }
    detail::color_interiors(state->bld, col);
    return col;
  };
  put_count(bundle.metadata, "parts", k);
  put_count(bundle.metadata, "part_size", n);
  put_count(bundle.metadata, "beta", beta);
  put_count(bundle.metadata, "copy_gadgets", state->copy_gadgets);
  put_count(bundle.metadata, "edge_instances", instances);
  put_count(bundle.metadata, "defect", state->delta);
  put_count(bundle.metadata, "u_vertex", state->u);
  put_count(bundle.metadata, "vertices", state->bld.n);
  return bundle;
}

// ---------------------------------------------------------------------------
// Random multicolored clique source with a planted solution.
// ---------------------------------------------------------------------------

Graph random_mcc_with_clique(int k, int n, double extra_density, std::uint64_t seed,
                             std::vector<int>* clique_positions) {
  if (k < 1 || n < 1) throw Error(Errc::invalid_argument, "need k >= 1 parts of n >= 1 vertices");
  if (extra_density < 0.0 || extra_density > 1.0)
    throw Error(Errc::invalid_argument, "extra_density must lie in [0, 1]");
  Rng rng(seed);
  std::vector<int> pick;
  for (int i = 0; i < k; ++i) pick.push_back(static_cast<int>(rng.range(1, n)));
  std::vector<Graph::Edge> edges;
  auto id = [n](int part, int pos) { return static_cast<Vertex>((part - 1) * n + pos); };
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= n; ++j) edges.push_back({id(i, j), id(i, j)});
  for (int i = 1; i <= k; ++i)
    for (int i2 = i + 1; i2 <= k; ++i2)
      for (int j = 1; j <= n; ++j)
        for (int j2 = 1; j2 <= n; ++j2) {
          bool planted = j == pick[static_cast<std::size_t>(i) - 1] &&
                         j2 == pick[static_cast<std::size_t>(i2) - 1];
          bool keep = planted || rng.uniform01() < extra_density;
          if (keep) edges.push_back({id(i, j), id(i2, j2)});
        }
  if (clique_positions) *clique_positions = pick;
  return Graph(k * n, edges);
}

}  // namespace degbound
