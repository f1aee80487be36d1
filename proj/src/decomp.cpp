#include "degbound/decomp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace degbound {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

int NiceTreeDecomposition::width() const {
  int w = -1;
  for (const auto& n : nodes) w = std::max(w, static_cast<int>(n.bag.size()) - 1);
  return w;
}

namespace {

bool contains(const VertexSet& sorted_set, Vertex v) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), v);
}

VertexSet sorted_unique(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Adjacency of the decomposition tree (bag ids 1-based).
std::vector<std::vector<int>> tree_adjacency(const TreeDecomposition& td, std::vector<std::string>* errs) {
  int b = static_cast<int>(td.bags.size());
  std::vector<std::vector<int>> adj(b + 1);
  for (auto [x, y] : td.tree_edges) {
    if (x < 1 || x > b || y < 1 || y > b || x == y) {
      if (errs) errs->push_back("tree edge (" + std::to_string(x) + "," + std::to_string(y) + ") is not between two distinct bags");
      continue;
    }
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  return adj;
}

}  // namespace

std::vector<std::string> validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  std::vector<std::string> errs;
  int b = static_cast<int>(td.bags.size());
  if (td.num_graph_vertices != g.num_vertices())
    errs.push_back("decomposition declares " + std::to_string(td.num_graph_vertices) + " graph vertices, graph has " +
                   std::to_string(g.num_vertices()));
  for (int i = 0; i < b; ++i) {
    for (Vertex v : td.bags[i])
      if (v < 1 || v > g.num_vertices())
        errs.push_back("bag " + std::to_string(i + 1) + " contains out-of-range vertex " + std::to_string(v));
    if (!std::is_sorted(td.bags[i].begin(), td.bags[i].end()) ||
        std::adjacent_find(td.bags[i].begin(), td.bags[i].end()) != td.bags[i].end())
      errs.push_back("bag " + std::to_string(i + 1) + " is not a sorted set");
  }
  if (!errs.empty()) return errs;

  auto adj = tree_adjacency(td, &errs);
  // invariant 1: the bag graph is a tree
  if (b == 0) {
    if (g.num_vertices() > 0) errs.push_back("no bags but the graph has vertices");
    return errs;
  }
  if (static_cast<int>(td.tree_edges.size()) != b - 1)
    errs.push_back("tree has " + std::to_string(td.tree_edges.size()) + " edges for " + std::to_string(b) +
                   " bags (a tree needs " + std::to_string(b - 1) + ")");
  {
    std::vector<char> seen(b + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int cnt = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++cnt;
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    if (cnt != b) errs.push_back("bag graph is disconnected");
  }
  if (!errs.empty()) return errs;

  // invariant 2: vertex coverage
  std::vector<char> covered(g.num_vertices() + 1, 0);
  for (const auto& bag : td.bags)
    for (Vertex v : bag) covered[v] = 1;
  for (Vertex v = 1; v <= g.num_vertices(); ++v)
    if (!covered[v]) errs.push_back("vertex " + std::to_string(v) + " appears in no bag");

  // invariant 3: edge coverage
  for (const auto& [u, v] : g.edges()) {
    bool ok = false;
    for (const auto& bag : td.bags)
      if (contains(bag, u) && contains(bag, v)) {
        ok = true;
        break;
      }
    if (!ok) errs.push_back("edge {" + std::to_string(u) + "," + std::to_string(v) + "} is covered by no bag");
  }

  // invariant 4: connectivity of the bags holding each vertex
  {
    std::vector<std::vector<int>> bags_of(g.num_vertices() + 1);
    for (int i = 0; i < b; ++i)
      for (Vertex v : td.bags[i]) bags_of[v].push_back(i + 1);
    std::vector<int> mark(b + 1, 0);
    int stamp = 0;
    for (Vertex v = 1; v <= g.num_vertices(); ++v) {
      if (bags_of[v].empty()) continue;
      ++stamp;
      for (int id : bags_of[v]) mark[id] = stamp;
      std::vector<int> stack{bags_of[v][0]};
      mark[bags_of[v][0]] = -stamp;
      std::size_t cnt = 0;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++cnt;
        for (int y : adj[x])
          if (mark[y] == stamp) {
            mark[y] = -stamp;
            stack.push_back(y);
          }
      }
      if (cnt != bags_of[v].size())
        errs.push_back("bags containing vertex " + std::to_string(v) + " do not form a connected subtree");
    }
  }

  if (td.is_path) {
    for (int i = 1; i <= b; ++i)
      if (adj[i].size() > 2) {
        errs.push_back("declared path decomposition has a bag of tree-degree " + std::to_string(adj[i].size()));
        break;
      }
  }
  return errs;
}

TreeDecomposition parse_td(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  int nbags = 0, maxbag = 0, n = 0;
  TreeDecomposition td;
  std::vector<char> seen_bag;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == 'c') continue;
    auto tok = split_ws(t);
    auto num = [&](const std::string& s) {
      try {
        return std::stoi(s);
      } catch (const std::exception&) {
        throw Error(Errc::bad_line, "line " + std::to_string(lineno) + ": non-numeric field '" + s + "'");
      }
    };
    if (!have_header) {
      if (tok.size() != 5 || tok[0] != "s" || tok[1] != "td")
        throw Error(Errc::malformed_header, "line " + std::to_string(lineno) + ": expected 's td <#bags> <max bag size> <n>'");
      nbags = num(tok[2]);
      maxbag = num(tok[3]);
      n = num(tok[4]);
      if (nbags < 0 || maxbag < 0 || n < 0)
        throw Error(Errc::malformed_header, "line " + std::to_string(lineno) + ": negative header fields");
      td.num_graph_vertices = n;
      td.bags.assign(nbags, {});
      seen_bag.assign(nbags + 1, 0);
      have_header = true;
      continue;
    }
    if (tok[0] == "b") {
      if (tok.size() < 2) throw Error(Errc::bad_line, "line " + std::to_string(lineno) + ": bag line without id");
      int id = num(tok[1]);
      if (id < 1 || id > nbags)
        throw Error(Errc::bad_line, "line " + std::to_string(lineno) + ": bag id out of range");
      if (seen_bag[id]) throw Error(Errc::bad_line, "line " + std::to_string(lineno) + ": bag " + tok[1] + " listed twice");
      seen_bag[id] = 1;
      VertexSet bag;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        int v = num(tok[i]);
        if (v < 1 || v > n)
          throw Error(Errc::vertex_out_of_range, "line " + std::to_string(lineno) + ": bag vertex out of range");
        bag.push_back(v);
      }
      td.bags[id - 1] = sorted_unique(std::move(bag));
      if (static_cast<int>(td.bags[id - 1].size()) > maxbag)
        throw Error(Errc::bad_line, "line " + std::to_string(lineno) + ": bag larger than header bound");
    } else {
      if (tok.size() != 2) throw Error(Errc::bad_line, "line " + std::to_string(lineno) + ": expected tree edge 'i j'");
      td.tree_edges.emplace_back(num(tok[0]), num(tok[1]));
    }
  }
  if (!have_header) throw Error(Errc::malformed_header, "missing 's td' header");
  // infer pathness: connected tree with max degree <= 2 and bags listed in path order
  if (nbags >= 1 && static_cast<int>(td.tree_edges.size()) == nbags - 1) {
    bool path_order = true;
    std::set<std::pair<int, int>> edges(td.tree_edges.begin(), td.tree_edges.end());
    for (int i = 1; i < nbags && path_order; ++i)
      if (!edges.count({i, i + 1}) && !edges.count({i + 1, i})) path_order = false;
    td.is_path = path_order;
  }
  return td;
}

std::string emit_td(const TreeDecomposition& td) {
  std::ostringstream out;
  int maxbag = 0;
  for (const auto& b : td.bags) maxbag = std::max(maxbag, static_cast<int>(b.size()));
  out << "s td " << td.bags.size() << ' ' << maxbag << ' ' << td.num_graph_vertices << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : td.bags[i]) out << ' ' << v;
    out << '\n';
  }
  for (auto [x, y] : td.tree_edges) out << x << ' ' << y << '\n';
  return out.str();
}

// --- nice form -----------------------------------------------------------------

namespace {

// Removes empty bags by reconnecting their tree neighbors in a chain; empty
// bags carry no information but would break Leaf synthesis.
void prune_empty_bags(std::vector<VertexSet>& bags, std::vector<std::pair<int, int>>& edges) {
  for (;;) {
    int victim = -1;
    for (std::size_t i = 0; i < bags.size(); ++i)
      if (bags[i].empty()) {
        victim = static_cast<int>(i) + 1;
        break;
      }
    if (victim == -1 || bags.size() == 1) return;
    std::vector<int> nbrs;
    std::vector<std::pair<int, int>> kept;
    for (auto [x, y] : edges) {
      if (x == victim)
        nbrs.push_back(y);
      else if (y == victim)
        nbrs.push_back(x);
      else
        kept.push_back({x, y});
    }
    for (std::size_t i = 1; i < nbrs.size(); ++i) kept.push_back({nbrs[i - 1], nbrs[i]});
    // delete the bag, remap ids above it
    bags.erase(bags.begin() + (victim - 1));
    for (auto& [x, y] : kept) {
      if (x > victim) --x;
      if (y > victim) --y;
    }
    edges = std::move(kept);
  }
}

}  // namespace

NiceTreeDecomposition to_nice(const TreeDecomposition& td, const Graph& g) {
  if (g.num_vertices() == 0) throw Error(Errc::invalid_argument, "to_nice: empty graph");
  std::vector<VertexSet> bags = td.bags;
  std::vector<std::pair<int, int>> edges = td.tree_edges;
  prune_empty_bags(bags, edges);
  if (bags.empty() || bags[0].empty())
    throw Error(Errc::invalid_decomposition, "to_nice: decomposition has no non-empty bag");

  int b = static_cast<int>(bags.size());
  std::vector<std::vector<int>> adj(b + 1);
  for (auto [x, y] : edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }

  NiceTreeDecomposition out;
  auto& nodes = out.nodes;
  auto add = [&](NodeKind k, Vertex v, int c1, int c2, VertexSet bag) {
    nodes.push_back(NiceNode{k, v, c1, c2, std::move(bag)});
    return static_cast<int>(nodes.size()) - 1;
  };
  // Builds the chain for a leaf-of-tree bag from nothing.
  auto build_base = [&](const VertexSet& bag) {
    int cur = add(NodeKind::Leaf, bag[0], -1, -1, {bag[0]});
    for (std::size_t i = 1; i < bag.size(); ++i)
      cur = add(NodeKind::Introduce, bag[i], cur, -1, VertexSet(bag.begin(), bag.begin() + i + 1));
    return cur;
  };
  // Adapts a finished chain whose top bag is `from` into bag `to`.
  auto adapt = [&](int cur, const VertexSet& from, const VertexSet& to) {
    VertexSet bag = from;
    for (Vertex v : from)
      if (!contains(to, v)) {
        bag.erase(std::find(bag.begin(), bag.end(), v));
        cur = add(NodeKind::Forget, v, cur, -1, bag);
      }
    for (Vertex v : to)
      if (!contains(bag, v)) {
        bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
        cur = add(NodeKind::Introduce, v, cur, -1, bag);
      }
    return cur;
  };

  // Iterative post-order over the decomposition tree rooted at bag 1.
  struct Frame {
    int id, parent;
    std::size_t next_child = 0;
    std::vector<int> done;  // node indices of adapted child chains
  };
  std::vector<Frame> stack;
  stack.push_back({1, 0});
  int root_chain = -1;
  while (!stack.empty()) {
    Frame& f = stack.back();
    bool descended = false;
    while (f.next_child < adj[f.id].size()) {
      int c = adj[f.id][f.next_child++];
      if (c == f.parent) continue;
      stack.push_back({c, f.id});
      descended = true;
      break;
    }
    if (descended) continue;
    // all children done: combine
    const VertexSet& bag = bags[f.id - 1];
    int cur;
    if (f.done.empty()) {
      cur = build_base(bag);
    } else {
      cur = f.done[0];
      for (std::size_t i = 1; i < f.done.size(); ++i) cur = add(NodeKind::Join, 0, cur, f.done[i], bag);
    }
    int parent = f.parent;
    int id = f.id;
    stack.pop_back();
    if (parent == 0) {
      root_chain = cur;
    } else {
      // adapt into the parent's bag and hand the chain up
      cur = adapt(cur, bags[id - 1], bags[parent - 1]);
      stack.back().done.push_back(cur);
    }
  }

  // close the root: forget everything down to the empty bag
  VertexSet bag = bags[0];
  int cur = root_chain;
  while (!bag.empty()) {
    Vertex v = bag.back();
    bag.pop_back();
    cur = add(NodeKind::Forget, v, cur, -1, bag);
  }
  return out;
}

std::vector<std::string> validate_nice(const Graph& g, const NiceTreeDecomposition& ntd) {
  std::vector<std::string> errs;
  const auto& nodes = ntd.nodes;
  if (nodes.empty()) return {"nice decomposition has no nodes"};
  std::vector<char> used(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const NiceNode& nd = nodes[i];
    auto child_ok = [&](int c) { return c >= 0 && c < static_cast<int>(i) && !used[c]; };
    switch (nd.kind) {
      case NodeKind::Leaf:
        if (nd.child1 != -1 || nd.child2 != -1) errs.push_back("leaf node with children");
        if (nd.bag.size() != 1 || nd.bag[0] != nd.vertex) errs.push_back("leaf bag must be exactly its vertex");
        break;
      case NodeKind::Introduce: {
        if (!child_ok(nd.child1) || nd.child2 != -1) {
          errs.push_back("introduce node with bad children");
          break;
        }
        used[nd.child1] = 1;
        VertexSet expect = nodes[nd.child1].bag;
        expect.insert(std::upper_bound(expect.begin(), expect.end(), nd.vertex), nd.vertex);
        if (contains(nodes[nd.child1].bag, nd.vertex) || nd.bag != expect)
          errs.push_back("introduce node bag mismatch");
        break;
      }
      case NodeKind::Forget: {
        if (!child_ok(nd.child1) || nd.child2 != -1) {
          errs.push_back("forget node with bad children");
          break;
        }
        used[nd.child1] = 1;
        VertexSet expect = nodes[nd.child1].bag;
        auto it = std::find(expect.begin(), expect.end(), nd.vertex);
        if (it == expect.end()) {
          errs.push_back("forget node drops a vertex missing from the child bag");
          break;
        }
        expect.erase(it);
        if (nd.bag != expect) errs.push_back("forget node bag mismatch");
        break;
      }
      case NodeKind::Join: {
        if (!child_ok(nd.child1) || !child_ok(nd.child2) || nd.child1 == nd.child2) {
          errs.push_back("join node with bad children");
          break;
        }
        used[nd.child1] = used[nd.child2] = 1;
        if (nodes[nd.child1].bag != nd.bag || nodes[nd.child2].bag != nd.bag)
          errs.push_back("join node children bags differ from its bag");
        break;
      }
    }
  }
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    if (!used[i]) errs.push_back("node " + std::to_string(i) + " is not reachable from the root");
  if (!nodes.back().bag.empty()) errs.push_back("root bag is not empty");
  if (!errs.empty()) return errs;

  // the underlying bags must also form a valid decomposition of g
  TreeDecomposition td;
  td.num_graph_vertices = g.num_vertices();
  for (const auto& nd : nodes) td.bags.push_back(nd.bag);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].child1 >= 0) td.tree_edges.push_back({static_cast<int>(i) + 1, nodes[i].child1 + 1});
    if (nodes[i].child2 >= 0) td.tree_edges.push_back({static_cast<int>(i) + 1, nodes[i].child2 + 1});
  }
  // empty bags (the root, possibly join scaffolding) are legal here, so
  // validate a copy with the root bag allowed to be empty
  auto sub = validate_decomposition(g, td);
  errs.insert(errs.end(), sub.begin(), sub.end());
  return errs;
}

// --- elimination forests ----------------------------------------------------

int EliminationForest::depth() const {
  int n = num_vertices();
  std::vector<int> memo(n + 1, -1);
  int best = 0;
  for (Vertex v = 1; v <= n; ++v) {
    // walk to the root, memoizing depths (vertex counts)
    std::vector<Vertex> path;
    Vertex x = v;
    while (x != 0 && memo[x] == -1) {
      path.push_back(x);
      x = parent[x - 1];
    }
    int base = (x == 0) ? 0 : memo[x];
    for (auto it = path.rbegin(); it != path.rend(); ++it) memo[*it] = ++base;
    best = std::max(best, memo[v]);
  }
  return best;
}

std::vector<std::string> validate_forest(const Graph& g, const EliminationForest& forest) {
  std::vector<std::string> errs;
  int n = g.num_vertices();
  if (forest.num_vertices() != n) {
    errs.push_back("forest has " + std::to_string(forest.num_vertices()) + " entries for " + std::to_string(n) +
                   " vertices");
    return errs;
  }
  for (Vertex v = 1; v <= n; ++v) {
    Vertex p = forest.parent[v - 1];
    if (p < 0 || p > n) errs.push_back("vertex " + std::to_string(v) + " has out-of-range parent");
    if (p == v) errs.push_back("vertex " + std::to_string(v) + " is its own parent");
  }
  if (!errs.empty()) return errs;
  // cycle check: walk up with a stamp per start
  std::vector<int> state(n + 1, 0);  // 0 unknown, 1 in progress, 2 done
  for (Vertex v = 1; v <= n; ++v) {
    Vertex x = v;
    std::vector<Vertex> path;
    while (x != 0 && state[x] == 0) {
      state[x] = 1;
      path.push_back(x);
      x = forest.parent[x - 1];
    }
    if (x != 0 && state[x] == 1) {
      errs.push_back("parent pointers contain a cycle through vertex " + std::to_string(x));
      return errs;
    }
    for (Vertex y : path) state[y] = 2;
  }
  // ancestry check per edge
  auto is_ancestor = [&](Vertex a, Vertex d) {
    Vertex x = d;
    while (x != 0) {
      if (x == a) return true;
      x = forest.parent[x - 1];
    }
    return false;
  };
  for (const auto& [u, v] : g.edges()) {
    if (u == v) continue;  // loops are vacuously fine
    if (!is_ancestor(u, v) && !is_ancestor(v, u))
      errs.push_back("edge {" + std::to_string(u) + "," + std::to_string(v) + "} joins incomparable vertices");
  }
  return errs;
}

EliminationForest parse_forest(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::map<int, int> entries;
  int lineno = 0;
  int n = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == 'c') continue;
    auto tok = split_ws(t);
    if (tok.size() != 2) throw Error(Errc::bad_line, "line " + std::to_string(lineno) + ": expected '<vertex> <parent|0>'");
    int v, p;
    try {
      v = std::stoi(tok[0]);
      p = std::stoi(tok[1]);
    } catch (const std::exception&) {
      throw Error(Errc::bad_line, "line " + std::to_string(lineno) + ": non-numeric field");
    }
    if (v < 1) throw Error(Errc::vertex_out_of_range, "line " + std::to_string(lineno) + ": vertex id must be positive");
    if (entries.count(v)) throw Error(Errc::bad_line, "line " + std::to_string(lineno) + ": vertex listed twice");
    entries[v] = p;
    n = std::max(n, std::max(v, p));
  }
  EliminationForest f;
  f.parent.assign(n, 0);
  std::vector<char> seen(n + 1, 0);
  for (auto [v, p] : entries) {
    f.parent[v - 1] = p;
    seen[v] = 1;
  }
  for (Vertex v = 1; v <= n; ++v)
    if (!seen[v]) throw Error(Errc::invalid_forest, "vertex " + std::to_string(v) + " has no line");
  return f;
}

std::string emit_forest(const EliminationForest& forest) {
  std::ostringstream out;
  for (Vertex v = 1; v <= forest.num_vertices(); ++v) out << v << ' ' << forest.parent[v - 1] << '\n';
  return out.str();
}

TreeDecomposition forest_to_decomposition(const EliminationForest& forest, const Graph& g) {
  int n = forest.num_vertices();
  if (n != g.num_vertices()) throw Error(Errc::invalid_argument, "forest size differs from graph");
  TreeDecomposition td;
  td.num_graph_vertices = n;
  td.bags.assign(n, {});
  std::vector<Vertex> roots;
  for (Vertex v = 1; v <= n; ++v) {
    VertexSet bag;
    Vertex x = v;
    while (x != 0) {
      bag.push_back(x);
      x = forest.parent[x - 1];
    }
    td.bags[v - 1] = sorted_unique(std::move(bag));
    if (forest.parent[v - 1] == 0)
      roots.push_back(v);
    else
      td.tree_edges.push_back({v, forest.parent[v - 1]});
  }
  for (std::size_t i = 1; i < roots.size(); ++i) td.tree_edges.push_back({roots[i - 1], roots[i]});
  return td;
}

// --- heuristics --------------------------------------------------------------

TreeDecomposition heuristic_decomposition(const Graph& g, EliminationHeuristic heuristic) {
  int n = g.num_vertices();
  if (n == 0) throw Error(Errc::invalid_argument, "heuristic_decomposition: empty graph");
  std::vector<std::set<int>> adj(n + 1);
  for (const auto& [u, v] : g.edges())
    if (u != v) {  // strip self-loops
      adj[u].insert(v);
      adj[v].insert(u);
    }
  std::vector<char> gone(n + 1, 0);
  std::vector<int> order;
  std::vector<VertexSet> elim_bag(n + 1);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    long long pick_score = -1;
    for (Vertex v = 1; v <= n; ++v) {
      if (gone[v]) continue;
      long long score;
      if (heuristic == EliminationHeuristic::min_degree) {
        score = static_cast<long long>(adj[v].size());
      } else {
        long long fill = 0;
        for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
          for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
            if (!adj[*it].count(*jt)) ++fill;
        score = fill;
      }
      if (pick == -1 || score < pick_score) {
        pick = v;
        pick_score = score;
      }
    }
    VertexSet bag(adj[pick].begin(), adj[pick].end());
    bag.push_back(pick);
    elim_bag[pick] = sorted_unique(std::move(bag));
    order.push_back(pick);
    for (int u : adj[pick])
      for (int w : adj[pick])
        if (u < w) {
          adj[u].insert(w);
          adj[w].insert(u);
        }
    for (int u : adj[pick]) adj[u].erase(pick);
    adj[pick].clear();
    gone[pick] = 1;
  }
  // bag of v connects to the bag of the earliest-eliminated later neighbor
  std::vector<int> rank(n + 1);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  TreeDecomposition td;
  td.num_graph_vertices = n;
  td.bags.assign(n, {});
  for (Vertex v = 1; v <= n; ++v) td.bags[rank[v]] = elim_bag[v];
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    int best = -1;
    for (Vertex u : elim_bag[v]) {
      if (u == v) continue;
      if (best == -1 || rank[u] < rank[best]) best = u;
    }
    if (best != -1) {
      td.tree_edges.push_back({i + 1, rank[best] + 1});
    } else if (i + 1 < n) {
      // isolated elimination bag: chain it to the next bag to keep one tree
      td.tree_edges.push_back({i + 1, i + 2});
    }
  }
  return td;
}

}  // namespace degbound
