#pragma once
// Hardness-instance generators.  Each generator compiles a source problem
// (CSP, multicolored clique with self-loops, or exact-SAT formula) into a
// bounded-degree vertex-deletion or defective-coloring instance together with
// a machine-checkable structure witness (path decomposition, elimination
// forest, or vertex cover) and a forward certificate builder that maps a
// solution of the source to a certificate for the built instance.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "degbound/csp.hpp"
#include "degbound/decomp.hpp"
#include "degbound/gadgets.hpp"
#include "degbound/graph.hpp"
#include "degbound/xsat.hpp"

namespace degbound {

enum class ProblemKind { bdvd, dc };

struct ReductionBundle {
  Graph graph{1, {}};
  ProblemKind problem = ProblemKind::bdvd;
  std::string generator;  // stable id, e.g. "bdvd-pw-d1"

  // Deletion problems: max degree `delta` after deleting at most `budget`
  // vertices.  Coloring problems: `chi` colors, defect bound `delta`.
  int delta = 0;
  int chi = 0;
  long long budget = 0;

  std::optional<TreeDecomposition> path_witness;  // is_path always true
  std::optional<EliminationForest> forest_witness;
  std::optional<VertexSet> cover_witness;

  // Maps a satisfying source certificate to a target certificate.  The
  // argument is, per source kind: 1-based per-variable values (CSP), the
  // 1-based in-part clique position per part (clique), or 0/1 per variable
  // (exact-SAT).  Throws invalid_argument when the source certificate does
  // not actually solve the source instance.
  std::function<VertexSet(const std::vector<int>&)> forward_deletion;  // bdvd only
  std::function<Coloring(const std::vector<int>&)> forward_coloring;   // dc only

  // Construction-specific counts (copies, budgets, gadget tallies, dummy
  // padding) for tests and provenance.
  std::map<std::string, std::string> metadata;
};

// --- Pathwidth constructions from CSP satisfiability ------------------------
// Sources are q-ary CSPs over domain [1, B].  All four emit a path witness.

// Degree bound 1; requires B = 3.  Budget k = (2n+1) * sum_j (s_j - 1 + n).
ReductionBundle bdvd_pw_delta1(const CspInstance& csp);

// Degree bound B-2 >= 2; requires B >= 4.  Budget n + kappa * k_c with
// kappa = (n+1)((2*delta+1)n + 1) and k_c = m*n*(delta+1) + sum_j (s_j - 1).
ReductionBundle bdvd_pw_general(const CspInstance& csp);

// Defect bound 1; requires B = 2*chi.  kappa = n+1 copies.
ReductionBundle dc_pw_delta1(const CspInstance& csp, int chi,
                             const GadgetProvider& provider = reference_provider());

// Defect bound delta >= 2; requires B = chi*(delta+1).  kappa = n*delta+1.
ReductionBundle dc_pw_general(const CspInstance& csp, int chi, int delta,
                              const GadgetProvider& provider = reference_provider());

// --- Tree-depth constructions from multicolored clique ----------------------
// Sources are graphs on k equal parts of n vertices (vertex (i-1)*n + j is
// position j of part i), a self-loop on every vertex, and no other edges
// inside a part.  k must be a power of two.  Both emit a forest witness of
// depth <= 16k + 8.

// Degree bound n^3; budget 2(|E|-kn)2n + kn*2n + 2*C(k,2) + k + n*beta with
// beta = 2k(2k-1) choice-gadget instances.  Requires n >= 2.
ReductionBundle bdvd_td(const Graph& mcc, int k);

// Defect bound 2(|E|-kn) + kn - (2*C(k,2)+k); requires that bound to be at
// least max(n, 4) (denser sources raise it).
ReductionBundle dc_td(const Graph& mcc, int k, int chi,
                      const GadgetProvider& provider = reference_provider());

// Uniform source for the tree-depth generators: k parts of n vertices, a
// planted k-clique (one vertex per part), self-loops everywhere, and every
// other cross-part edge kept with probability extra_density.  The planted
// positions are returned through clique_positions when non-null.
Graph random_mcc_with_clique(int k, int n, double extra_density, std::uint64_t seed,
                             std::vector<int>* clique_positions = nullptr);

// --- Vertex-cover constructions from exact satisfiability -------------------
// Sources are (3,4) exact-SAT formulas; variables are padded with dummies to
// a power of 4 (bdvd) or 16 (dc), recorded in metadata.  Both emit the
// explicit cover witness from the construction plus the forest it induces.

// Degree bound n^3 (n padded), budget = number of variable groups.
ReductionBundle bdvd_vc(const XsatFormula& formula);

// Defect bound n_V + n_C * n_F; works for any chi >= 2.
ReductionBundle dc_vc(const XsatFormula& formula, int chi);

// --- Serialization -----------------------------------------------------------
// A bundle directory holds instance.gr, params.json, the witness files
// (witness.td, witness.forest, witness.cover as applicable), and
// provenance.json.  Loading restores everything except the forward builders,
// which exist only in process.
void save_bundle(const ReductionBundle& bundle, const std::string& dir);
ReductionBundle load_bundle(const std::string& dir);

}  // namespace degbound
