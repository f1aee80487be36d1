#pragma once

#include <string>
#include <utility>
#include <vector>

#include "degbound/graph.hpp"

namespace degbound {

// Tree decomposition with 1-based bag ids (bag i lives at bags[i-1]).  Bags
// are kept sorted.  is_path declares that the tree is a simple path with the
// bags listed in path order; parse_td infers it, generators set it.
struct TreeDecomposition {
  int num_graph_vertices = 0;
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> tree_edges;
  bool is_path = false;

  int width() const;  // max bag size - 1, or -1 when there are no bags
};

// Empty vector means the decomposition satisfies all four invariants for g:
// (1) the bag graph is a tree, (2) every vertex occurs in a bag, (3) every
// edge has both endpoints in a common bag, (4) the bags containing any fixed
// vertex induce a connected subtree.  Otherwise a list of human-readable
// violations is returned.
std::vector<std::string> validate_decomposition(const Graph& g, const TreeDecomposition& td);

// PACE-style .td exchange format:
//   s td <#bags> <max bag size> <n>
//   b <id> <v...>
//   <i> <j>          (tree edges)
TreeDecomposition parse_td(const std::string& text);
std::string emit_td(const TreeDecomposition& td);

// --- nice form ---------------------------------------------------------------

enum class NodeKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
  NodeKind kind;
  Vertex vertex = 0;  // the introduced/forgotten vertex; for Leaf, the bag vertex
  int child1 = -1;
  int child2 = -1;
  VertexSet bag;  // sorted
};

// Nodes are stored in topological order (children strictly before parents);
// the root is the last node and has an empty bag.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;

  int root() const { return static_cast<int>(nodes.size()) - 1; }
  int width() const;
};

// Expands td into nice form of the same width with O(width * n) nodes:
// leaf bags become Leaf+Introduce chains, tree edges become Forget+Introduce
// adapters, higher-degree nodes become Join chains, and the root is closed
// with trailing Forgets down to the empty bag.
NiceTreeDecomposition to_nice(const TreeDecomposition& td, const Graph& g);

std::vector<std::string> validate_nice(const Graph& g, const NiceTreeDecomposition& ntd);

// --- elimination forests -------------------------------------------------------

// parent[v-1] is the parent of vertex v, or 0 for roots.
struct EliminationForest {
  std::vector<Vertex> parent;

  int num_vertices() const { return static_cast<int>(parent.size()); }
  int depth() const;  // vertices on the longest root-to-leaf path
};

// Empty vector means: parent pointers form a forest over V(g) and every edge
// of g connects an ancestor-descendant pair.
std::vector<std::string> validate_forest(const Graph& g, const EliminationForest& forest);

// Text format: one "<vertex> <parent|0>" line per vertex.
EliminationForest parse_forest(const std::string& text);
std::string emit_forest(const EliminationForest& forest);

// Bag of v = ancestors of v (v included); tree mirrors the forest, with root
// bags chained so the result is one tree.  Width <= depth - 1.
TreeDecomposition forest_to_decomposition(const EliminationForest& forest, const Graph& g);

// --- heuristics ----------------------------------------------------------------

enum class EliminationHeuristic { min_degree, min_fill };

// Elimination-ordering decomposition; ties break toward the lowest vertex id,
// so the result is deterministic.  Self-loops in g are ignored (stripped).
TreeDecomposition heuristic_decomposition(const Graph& g, EliminationHeuristic heuristic);

}  // namespace degbound
