#include "degbound/graph.hpp"

#include <algorithm>
#include <sstream>

namespace degbound {

Graph::Graph(int n, std::vector<Edge> edge_list) : n_(n) {
  if (n < 0) throw Error(Errc::invalid_argument, "graph needs a non-negative vertex count");
  for (auto& [u, v] : edge_list) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
      throw Error(Errc::vertex_out_of_range,
                  "edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  for (std::size_t i = 1; i < edge_list.size(); ++i)
    if (edge_list[i] == edge_list[i - 1])
      throw Error(Errc::duplicate_edge, "duplicate edge " + std::to_string(edge_list[i].first) + " " +
                                            std::to_string(edge_list[i].second));
  edges_ = std::move(edge_list);
  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u - 1].push_back(v);
    if (u != v)
      adj_[v - 1].push_back(u);
    else
      has_any_loop_ = true;
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const VertexSet& list = neighbors(u);
  check(v);
  return std::binary_search(list.begin(), list.end(), v);
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 1; v <= n_; ++v) best = std::max(best, degree(v));
  return best;
}

Graph parse_gr(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  int n = 0;
  long long m = 0;
  std::vector<Graph::Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == 'c') continue;
    auto tok = split_ws(t);
    if (!have_header) {
      if (tok.size() != 4 || tok[0] != "p" || tok[1] != "tw")
        throw Error(Errc::malformed_header, "line " + std::to_string(lineno) + ": expected 'p tw <n> <m>' header");
      try {
        n = std::stoi(tok[2]);
        m = std::stoll(tok[3]);
      } catch (const std::exception&) {
        throw Error(Errc::malformed_header, "line " + std::to_string(lineno) + ": non-numeric header fields");
      }
      if (n < 0 || m < 0)
        throw Error(Errc::malformed_header, "line " + std::to_string(lineno) + ": negative counts in header");
      have_header = true;
      continue;
    }
    if (tok.size() != 2)
      throw Error(Errc::bad_line, "line " + std::to_string(lineno) + ": expected 'u v' edge line");
    int u, v;
    try {
      u = std::stoi(tok[0]);
      v = std::stoi(tok[1]);
    } catch (const std::exception&) {
      throw Error(Errc::bad_line, "line " + std::to_string(lineno) + ": non-numeric edge endpoints");
    }
    if (u < 1 || u > n || v < 1 || v > n)
      throw Error(Errc::vertex_out_of_range,
                  "line " + std::to_string(lineno) + ": edge endpoint out of range: " + t);
    edges.emplace_back(u, v);
  }
  if (!have_header) throw Error(Errc::malformed_header, "missing 'p tw' header");
  if (static_cast<long long>(edges.size()) != m)
    throw Error(Errc::malformed_header, "header announces " + std::to_string(m) + " edges but " +
                                            std::to_string(edges.size()) + " edge lines found");
  return Graph(n, std::move(edges));  // Graph ctor reports duplicate_edge
}

std::string emit_gr(const Graph& g) {
  std::ostringstream out;
  out << "p tw " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

bool verify_deletion_set(const Graph& g, const VertexSet& s, int delta, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  std::vector<char> deleted(g.num_vertices() + 1, 0);
  for (Vertex v : s) {
    if (v < 1 || v > g.num_vertices()) return fail("deletion set contains out-of-range vertex " + std::to_string(v));
    if (deleted[v]) return fail("deletion set lists vertex " + std::to_string(v) + " twice");
    deleted[v] = 1;
  }
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    if (deleted[v]) continue;
    int deg = 0;
    for (Vertex u : g.neighbors(v))
      if (!deleted[u]) ++deg;
    if (deg > delta)
      return fail("vertex " + std::to_string(v) + " keeps degree " + std::to_string(deg) + " > " +
                  std::to_string(delta));
  }
  return true;
}

bool verify_coloring(const Graph& g, const Coloring& coloring, int chi, int delta, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (static_cast<int>(coloring.size()) != g.num_vertices())
    return fail("coloring has " + std::to_string(coloring.size()) + " entries for " +
                std::to_string(g.num_vertices()) + " vertices");
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    int c = coloring[v - 1];
    if (c < 1 || c > chi)
      return fail("vertex " + std::to_string(v) + " has color " + std::to_string(c) + " outside [1," +
                  std::to_string(chi) + "]");
  }
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    int same = 0;
    for (Vertex u : g.neighbors(v))
      if (coloring[u - 1] == coloring[v - 1]) ++same;  // u == v covers the loop convention
    if (same > delta)
      return fail("vertex " + std::to_string(v) + " has " + std::to_string(same) +
                  " same-colored neighbors > " + std::to_string(delta));
  }
  return true;
}

Graph remove_vertices(const Graph& g, const VertexSet& removed, std::vector<int>* old_to_new) {
  std::vector<char> drop(g.num_vertices() + 1, 0);
  for (Vertex v : removed) {
    if (v < 1 || v > g.num_vertices())
      throw Error(Errc::vertex_out_of_range, "remove_vertices: vertex " + std::to_string(v));
    drop[v] = 1;
  }
  std::vector<int> map(g.num_vertices() + 1, 0);
  int next = 0;
  for (Vertex v = 1; v <= g.num_vertices(); ++v)
    if (!drop[v]) map[v] = ++next;
  std::vector<Graph::Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (!drop[u] && !drop[v]) edges.emplace_back(map[u], map[v]);
  if (old_to_new) *old_to_new = map;
  return Graph(next, std::move(edges));
}

}  // namespace degbound
