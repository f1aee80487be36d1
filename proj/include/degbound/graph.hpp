#pragma once

#include <string>
#include <utility>
#include <vector>

#include "degbound/util.hpp"

namespace degbound {

using Vertex = int;  // 1-based vertex ids, matching the .gr format
using VertexSet = std::vector<Vertex>;

// Vertex coloring: color_of[v-1] is the color of vertex v, colors are 1-based.
using Coloring = std::vector<int>;

// Simple undirected graph, immutable after construction.  Self-loops are
// allowed (an edge {v,v}); parallel edges are not.  A self-loop contributes 1
// to the degree of its vertex, and for defective colorings a looped vertex
// counts as its own same-colored neighbor.
class Graph {
 public:
  using Edge = std::pair<Vertex, Vertex>;

  Graph(int n, std::vector<Edge> edge_list);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  // Sorted neighbor list; a looped vertex appears once in its own list.
  const VertexSet& neighbors(Vertex v) const { return adj_[check(v) - 1]; }

  bool adjacent(Vertex u, Vertex v) const;
  bool has_loop(Vertex v) const { return adjacent(v, v); }
  bool has_any_loop() const { return has_any_loop_; }

  // Degree with the self-loop convention: a loop adds exactly 1.
  int degree(Vertex v) const { return static_cast<int>(neighbors(check(v)).size()); }
  int max_degree() const;

  // Canonical edge list: each edge once as (min,max), sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  Vertex check(Vertex v) const {
    if (v < 1 || v > n_)
      throw Error(Errc::vertex_out_of_range, "vertex id " + std::to_string(v) + " out of range [1," + std::to_string(n_) + "]");
    return v;
  }

  int n_;
  bool has_any_loop_ = false;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;
};

// PACE-style .gr format: optional "c" comment lines, one "p tw <n> <m>"
// header, then m edge lines "u v" with 1-based ids.  "v v" encodes a
// self-loop.  Errors: malformed_header, vertex_out_of_range, duplicate_edge,
// bad_line.
Graph parse_gr(const std::string& text);
std::string emit_gr(const Graph& g);

// True iff S is a set of vertices of g whose removal leaves max degree <= delta.
// S may be given in any order; duplicates are rejected.
bool verify_deletion_set(const Graph& g, const VertexSet& s, int delta, std::string* why = nullptr);

// True iff coloring assigns every vertex a color in [1,chi] and every vertex
// has at most delta same-colored neighbors (a self-loop makes a vertex its own
// same-colored neighbor).
bool verify_coloring(const Graph& g, const Coloring& coloring, int chi, int delta, std::string* why = nullptr);

// Induced subgraph on V(g) minus `removed` with vertices renumbered 1..n',
// used by the brute-force oracles.  Returns the mapping old->new (0 for

// removed vertices) if requested.
Graph remove_vertices(const Graph& g, const VertexSet& removed, std::vector<int>* old_to_new = nullptr);

}  // namespace degbound
