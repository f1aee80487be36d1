#include "degbound/gadgets.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "degbound/decomp.hpp"
#include "degbound/util.hpp"

namespace degbound {

namespace {

const char* tag_name(ContractTag t) {
  switch (t) {
    case ContractTag::equality: return "equality";
    case ContractTag::palette: return "palette";
    case ContractTag::difference: return "difference";
    case ContractTag::exclusion: return "exclusion";
    case ContractTag::implication: return "implication";
  }
  return "?";
}

// Incremental gadget builder.  Keeps the slot conventions of Gadget and
// translates sub-gadget slots when composing.
struct Assembler {
  Gadget g;

  Assembler(ContractTag tag, int chi, int delta, int attachments, int palette) {
    g.tag = tag;
    g.chi = chi;
    g.delta = delta;
    g.attachments = attachments;
    g.palette_endpoints = palette;
  }

  int internal() { return ++g.internals; }

  void edge(int a, int b) { g.edges.emplace_back(a, b); }

  void bag(std::vector<int> slots) { g.bags.push_back(std::move(slots)); }

  // Splices `sub` into this gadget.  endpoint_map[i] is the slot (endpoint or
  // internal of *this*) standing in for sub's endpoint i.  Sub endpoints that
  // land on internal slots are added to every translated recipe bag, since
  // only true endpoints are implicitly present in every bag.
  void inline_sub(const Gadget& sub, const std::vector<int>& endpoint_map) {
    if (static_cast<int>(endpoint_map.size()) != sub.total_endpoints())
      throw Error(Errc::invalid_argument, "inline_sub: endpoint map size mismatch");
    int offset = g.internals;
    g.internals += sub.internals;
    auto translate = [&](int slot) {
      if (slot > 0) return offset + slot;
      return endpoint_map[static_cast<std::size_t>(-slot) - 1];
    };
    for (const auto& [a, b] : sub.edges) g.edges.emplace_back(translate(a), translate(b));
    std::vector<int> pinned;
    for (int slot : endpoint_map)
      if (slot > 0) pinned.push_back(slot);
    for (const auto& sub_bag : sub.bags) {
      std::vector<int> bag = pinned;
      for (int slot : sub_bag) bag.push_back(translate(slot));
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      g.bags.push_back(std::move(bag));
    }
  }
};

void require_gadget_params(int chi, int delta) {
  if (chi < 2) throw Error(Errc::invalid_argument, "coloring gadgets need chi >= 2");
  if (delta < 0) throw Error(Errc::invalid_argument, "coloring gadgets need delta >= 0");
}

void require_provider(const GadgetProvider& provider, int chi, int delta) {
  if (!provider.supports(chi, delta))
    throw Error(Errc::not_implemented, "gadget provider '" + provider.name() +
                                           "' does not support chi=" + std::to_string(chi) +
                                           ", delta=" + std::to_string(delta));
}

// Two-color provider.  Equality: 2*delta+1 pairwise-nonadjacent connectors,
// each adjacent to both endpoints.  With distinct endpoint colors every
// connector is same-colored with exactly one endpoint, so one endpoint
// collects at least delta+1 same-colored connectors; with equal endpoint
// colors, coloring every connector with the other color is valid and adds no
// same-colored neighbor anywhere.  Palette: with three vertices and two
// colors the pigeonhole forces a shared color, so the empty fragment works.
class ReferenceProvider : public GadgetProvider {
 public:
  bool supports(int chi, int delta) const override { return chi == 2 && delta >= 1; }

  Gadget equality(int chi, int delta) const override {
    require_gadget_params(chi, delta);
    require_provider(*this, chi, delta);
    Assembler a(ContractTag::equality, chi, delta, 2, 0);
    for (int i = 0; i < 2 * delta + 1; ++i) {
      int w = a.internal();
      a.edge(-1, w);
      a.edge(-2, w);
      a.bag({w});
    }
    return std::move(a.g);
  }

  Gadget palette(int chi, int delta) const override {
    require_gadget_params(chi, delta);
    require_provider(*this, chi, delta);
    Assembler a(ContractTag::palette, chi, delta, 3, 0);
    return std::move(a.g);
  }

  std::string name() const override { return "reference-two-color"; }
};

}  // namespace

int Gadget::width_bound() const {
  std::size_t largest = 0;
  for (const auto& bag : bags) largest = std::max(largest, bag.size());
  return total_endpoints() + static_cast<int>(largest);
}

const GadgetProvider& reference_provider() {
  static const ReferenceProvider instance;
  return instance;
}

Gadget equality_gadget(int chi, int delta, const GadgetProvider& provider) {
  require_gadget_params(chi, delta);
  require_provider(provider, chi, delta);
  return provider.equality(chi, delta);
}

Gadget palette_gadget(int chi, int delta, const GadgetProvider& provider) {
  require_gadget_params(chi, delta);
  require_provider(provider, chi, delta);
  return provider.palette(chi, delta);
}

Gadget difference_gadget(int chi, int delta, int k, const GadgetProvider& provider) {
  require_gadget_params(chi, delta);
  if (k < 0) throw Error(Errc::invalid_argument, "difference gadget needs k >= 0");
  require_provider(provider, chi, delta);
  const Gadget q = provider.equality(chi, delta);
  Assembler a(ContractTag::difference, chi, delta, 2, 0);
  a.g.k = k;
  for (int i = 0; i < k; ++i) {
    int leaf = a.internal();
    a.edge(-2, leaf);
    a.inline_sub(q, {-1, leaf});
  }
  return std::move(a.g);
}

Gadget exclusion_gadget(int chi, int delta, int c1, int c2, const GadgetProvider& provider) {
  require_gadget_params(chi, delta);
  if (delta < 1) throw Error(Errc::invalid_argument, "exclusion gadget needs delta >= 1");
  if (c1 < 1 || c1 > chi || c2 < 1 || c2 > chi)
    throw Error(Errc::invalid_argument, "exclusion gadget palette index out of range");
  require_provider(provider, chi, delta);
  const Gadget q = provider.equality(chi, delta);
  Assembler a(ContractTag::exclusion, chi, delta, 2, chi);
  a.g.c1 = c1;
  a.g.c2 = c2;
  const int u1 = -1, u2 = -2;
  auto pal = [&](int c) { return -(2 + c); };

  if (c1 == c2 || chi == 2) {
    // Core triple v1 - a - v2; a is pinned to the palette color c1 and
    // saturated with delta-1 neighbors of that color, so at most one of
    // v1, v2 may carry it.
    int v1 = a.internal();
    int v2 = a.internal();
    int core = a.internal();
    a.edge(core, v1);
    a.edge(core, v2);
    a.inline_sub(q, {u1, v1});
    a.bag({v1, core});
    a.inline_sub(q, {pal(c1), core});
    a.inline_sub(difference_gadget(chi, delta, delta - 1, provider), {pal(c1), core});
    a.bag({core, v2});
    if (c1 == c2) {
      a.inline_sub(q, {u2, v2});
    } else {
      a.inline_sub(difference_gadget(chi, delta, delta + 1, provider), {u2, v2});
    }
  } else {
    // chi >= 3: serial path v1 - a1 - a2 - a3 - v2; each a_i is barred from
    // two palette colors by a palette gadget plus two saturating difference
    // gadgets, leaving a forced color trail from v1 to v2.
    int c3 = 1;
    while (c3 == c1 || c3 == c2) ++c3;
    const Gadget p = provider.palette(chi, delta);
    const Gadget d = difference_gadget(chi, delta, delta, provider);
    int v1 = a.internal();
    int a1 = a.internal();
    int a2 = a.internal();
    int a3 = a.internal();
    int v2 = a.internal();
    a.edge(v1, a1);
    a.edge(a1, a2);
    a.edge(a2, a3);
    a.edge(a3, v2);
    a.inline_sub(q, {u1, v1});
    a.bag({v1, a1});
    const std::array<std::array<int, 3>, 3> stops = {{{a1, c1, c3}, {a2, c1, c3}, {a3, c1, c2}}};
    for (int i = 0; i < 3; ++i) {
      auto [ai, cx, cy] = stops[static_cast<std::size_t>(i)];
      a.inline_sub(p, {pal(cx), pal(cy), ai});
      a.inline_sub(d, {pal(cx), ai});
      a.inline_sub(d, {pal(cy), ai});
      int next = (i == 0) ? a2 : (i == 1) ? a3 : v2;
      a.bag({ai, next});
    }
    a.inline_sub(q, {u2, v2});
  }
  return std::move(a.g);
}

Gadget implication_gadget(int chi, int delta, int c1, int c2, const GadgetProvider& provider) {
  require_gadget_params(chi, delta);
  if (delta < 1) throw Error(Errc::invalid_argument, "implication gadget needs delta >= 1");
  if (c1 < 1 || c1 > chi || c2 < 1 || c2 > chi)
    throw Error(Errc::invalid_argument, "implication gadget palette index out of range");
  require_provider(provider, chi, delta);
  Assembler a(ContractTag::implication, chi, delta, 2, chi);
  a.g.c1 = c1;
  a.g.c2 = c2;
  std::vector<int> identity;
  for (int e = 1; e <= 2 + chi; ++e) identity.push_back(-e);
  for (int ck = 1; ck <= chi; ++ck) {
    if (ck == c2) continue;
    a.inline_sub(exclusion_gadget(chi, delta, c1, ck, provider), identity);
  }
  return std::move(a.g);
}

Graph splice_into(const Graph& host, const Gadget& g, const std::vector<Vertex>& endpoints,
                  std::vector<Vertex>* internals) {
  const int total = g.total_endpoints();
  if (static_cast<int>(endpoints.size()) != total)
    throw Error(Errc::invalid_argument, "splice_into: expected " + std::to_string(total) +
                                            " endpoints, got " + std::to_string(endpoints.size()));
  std::set<Vertex> seen;
  for (Vertex v : endpoints) {
    if (v < 1 || v > host.num_vertices())
      throw Error(Errc::vertex_out_of_range, "splice_into: endpoint " + std::to_string(v) + " not in host");
    if (!seen.insert(v).second)
      throw Error(Errc::invalid_argument, "splice_into: endpoints must be distinct");
  }
  auto translate = [&](int slot) -> Vertex {
    if (slot > 0) {
      if (slot > g.internals) throw Error(Errc::invalid_argument, "splice_into: internal slot out of range");
      return host.num_vertices() + slot;
    }
    int idx = -slot;
    if (idx < 1 || idx > total) throw Error(Errc::invalid_argument, "splice_into: endpoint slot out of range");
    return endpoints[static_cast<std::size_t>(idx) - 1];
  };
  std::set<Graph::Edge> edge_set(host.edges().begin(), host.edges().end());
  for (const auto& [a, b] : g.edges) {
    Vertex u = translate(a), v = translate(b);
    if (u == v) throw Error(Errc::invalid_argument, "splice_into: gadget edge collapses to a loop");
    edge_set.insert({std::min(u, v), std::max(u, v)});
  }
  if (internals) {
    internals->clear();
    for (int i = 1; i <= g.internals; ++i) internals->push_back(host.num_vertices() + i);
  }
  return Graph(host.num_vertices() + g.internals,
               std::vector<Graph::Edge>(edge_set.begin(), edge_set.end()));
}

std::vector<Graph> all_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Graph::Edge> pairs;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs.size()); ++mask) {
      std::vector<Graph::Edge> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) edges.push_back(pairs[i]);
      out.emplace_back(n, std::move(edges));
    }
  }
  return out;
}

bool gadget_bags_valid(const Gadget& g, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const int total = g.total_endpoints();
  if (g.attachments < 2) return fail("gadget needs at least two attachment endpoints");
  std::set<std::pair<int, int>> seen_edges;
  for (const auto& [a, b] : g.edges) {
    for (int slot : {a, b}) {
      if (slot == 0 || slot > g.internals || slot < -total) return fail("edge slot out of range");
    }
    if (a == b) return fail("gadget edge is a loop");
    if (!seen_edges.insert({std::min(a, b), std::max(a, b)}).second) return fail("duplicate gadget edge");
  }
  // Fragment graph: endpoints are vertices 1..total, internal slot i is total+i.
  auto translate = [&](int slot) { return slot > 0 ? total + slot : -slot; };
  std::vector<Graph::Edge> edges;
  for (const auto& [a, b] : g.edges) {
    Vertex u = translate(a), v = translate(b);
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  Graph fragment(total + g.internals, std::move(edges));

  TreeDecomposition td;
  td.num_graph_vertices = total + g.internals;
  td.is_path = true;
  std::vector<Vertex> everyone;
  for (int e = 1; e <= total; ++e) everyone.push_back(e);
  if (g.bags.empty()) {
    if (g.internals > 0) return fail("gadget has internal vertices but no recipe bags");
    td.bags.push_back(everyone);
  }
  for (const auto& recipe : g.bags) {
    VertexSet bag = everyone;
    for (int slot : recipe) {
      if (slot <= 0 || slot > g.internals) return fail("recipe bag slot out of range");
      bag.push_back(total + slot);
    }
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    td.bags.push_back(std::move(bag));
  }
  for (int i = 1; i < static_cast<int>(td.bags.size()); ++i) td.tree_edges.emplace_back(i, i + 1);
  auto violations = validate_decomposition(fragment, td);
  if (!violations.empty()) return fail("recipe is not a path decomposition: " + violations.front());
  return true;
}

// ---------------------------------------------------------------------------
// Contract verification.
// ---------------------------------------------------------------------------

namespace {

constexpr int kNoLimit = std::numeric_limits<int>::max() / 4;

struct Bound {
  int endpoint;  // 0-based endpoint index
  int color;     // 1-based color
  int lo;
  int hi;
};

// Decides whether the gadget internals admit a valid coloring given fixed
// endpoint colors and per-(endpoint,color) limits on how many internal
// neighbors of each color the extension may give an endpoint.  Results are
// memoized per query signature; interchangeable internals (twins) are
// explored in canonical nondecreasing color order.
class FragmentSolver {
 public:
  FragmentSolver(const Gadget& g, int chi, int delta) : chi_(chi), delta_(delta) {
    const int total = g.total_endpoints();
    n_ = g.internals;
    int_adj_.assign(n_, {});
    end_nbrs_.assign(n_, {});
    end_int_deg_.assign(total, 0);
    for (const auto& [a, b] : g.edges) {
      if (a > 0 && b > 0) {
        int_adj_[a - 1].push_back(b - 1);
        int_adj_[b - 1].push_back(a - 1);
      } else if (a > 0 || b > 0) {
        int internal = (a > 0 ? a : b) - 1;
        int endpoint = -(a > 0 ? b : a) - 1;
        end_nbrs_[internal].push_back(endpoint);
        ++end_int_deg_[endpoint];
      }
    }
    for (auto& v : int_adj_) std::sort(v.begin(), v.end());
    for (auto& v : end_nbrs_) std::sort(v.begin(), v.end());
    build_order();
    col_.assign(n_, 0);
    same_.assign(n_, 0);
    ecount_.assign(n_ * (chi + 1), 0);
    add_.assign(total * (chi + 1), 0);
    lo_.assign(total * (chi + 1), 0);
    hi_.assign(total * (chi + 1), kNoLimit);
    rem_.assign(total, 0);
  }

  int internal_degree(int endpoint) const { return end_int_deg_[endpoint]; }

  // When set, a successful search also writes the internal colors (indexed by
  // internal slot minus one) to the target before returning.
  void capture_witness(std::vector<int>* target) { capture_ = target; }

  bool extension_exists(const std::vector<int>& ecol, const std::vector<Bound>& bounds) {
    const int total = static_cast<int>(end_int_deg_.size());
    // Merge bounds into per-(endpoint,color) windows, clamped to what the
    // structure can deliver so equivalent queries share a cache entry.
    for (int e = 0; e < total; ++e)
      for (int c = 1; c <= chi_; ++c) {
        lo_[slot(e, c)] = 0;
        hi_[slot(e, c)] = end_int_deg_[e];
      }
    for (const auto& b : bounds) {
      int s = slot(b.endpoint, b.color);
      lo_[s] = std::max(lo_[s], b.lo);
      hi_[s] = std::min(hi_[s], b.hi);
    }
    std::string key;
    key.reserve(static_cast<std::size_t>(total) * (2 * chi_ + 1));
    for (int e = 0; e < total; ++e) {
      key.push_back(static_cast<char>(ecol[e]));
      for (int c = 1; c <= chi_; ++c) {
        int s = slot(e, c);
        if (lo_[s] > hi_[s]) return false;
        if (lo_[s] == 0 && hi_[s] == end_int_deg_[e]) continue;
        key.push_back(static_cast<char>(1 + c));
        key.push_back(static_cast<char>(100 + lo_[s]));
        key.push_back(static_cast<char>(100 + std::min(hi_[s], 120)));
      }
      key.push_back(static_cast<char>(0x7f));
    }
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    for (int i = 0; i < n_; ++i)
      for (int c = 1; c <= chi_; ++c) {
        int cnt = 0;
        for (int e : end_nbrs_[i]) cnt += (ecol[e] == c);
        ecount_[static_cast<std::size_t>(i) * (chi_ + 1) + c] = cnt;
      }
    std::fill(col_.begin(), col_.end(), 0);
    std::fill(add_.begin(), add_.end(), 0);
    for (int e = 0; e < total; ++e) rem_[e] = end_int_deg_[e];
    bool sat = dfs(0);
    cache_.emplace(std::move(key), sat);
    return sat;
  }

 private:
  int slot(int e, int c) const { return e * (chi_ + 1) + c; }

  // Twins: identical neighborhoods once the pair itself is ignored, so any
  // solution can be permuted within a class.  Classes require all-pairs
  // agreement to keep the swap argument valid.
  void build_order() {
    std::vector<int> cls(n_, -1);
    std::vector<std::vector<int>> classes;
    auto twins = [&](int x, int y) {
      if (end_nbrs_[x] != end_nbrs_[y]) return false;
      std::vector<int> ax, ay;
      for (int v : int_adj_[x])
        if (v != y) ax.push_back(v);
      for (int v : int_adj_[y])
        if (v != x) ay.push_back(v);
      return ax == ay;
    };
    for (int i = 0; i < n_; ++i) {
      if (cls[i] >= 0) continue;
      cls[i] = static_cast<int>(classes.size());
      classes.push_back({i});
      for (int j = i + 1; j < n_; ++j) {
        if (cls[j] >= 0) continue;
        bool ok = true;
        for (int member : classes.back())
          if (!twins(member, j)) {
            ok = false;
            break;
          }
        if (ok) {
          cls[j] = cls[i];
          classes.back().push_back(j);
        }
      }
    }
    // Most-constrained-first over whole classes: maximize already-colored
    // neighbors (endpoints count from the start).
    std::vector<char> placed(classes.size(), 0);
    std::vector<int> score(n_, 0);
    for (int i = 0; i < n_; ++i) score[i] = static_cast<int>(end_nbrs_[i].size());
    chain_.assign(n_, 0);
    while (order_.size() < static_cast<std::size_t>(n_)) {
      int best = -1;
      for (std::size_t c = 0; c < classes.size(); ++c) {
        if (placed[c]) continue;
        int rep = classes[c].front();
        if (best < 0 || score[rep] > score[classes[static_cast<std::size_t>(best)].front()]) best = static_cast<int>(c);
      }
      placed[static_cast<std::size_t>(best)] = 1;
      bool first = true;
      for (int v : classes[static_cast<std::size_t>(best)]) {
        chain_[order_.size()] = first ? 0 : 1;
        first = false;
        order_.push_back(v);
        for (int u : int_adj_[v]) ++score[u];
      }
    }
  }

  bool dfs(std::size_t pos) {
    if (pos == order_.size()) {
      const int total = static_cast<int>(end_int_deg_.size());
      for (int e = 0; e < total; ++e)
        for (int c = 1; c <= chi_; ++c)
          if (add_[slot(e, c)] < lo_[slot(e, c)]) return false;
      if (capture_) *capture_ = col_;
      return true;
    }
    int v = order_[pos];
    int first = chain_[pos] ? col_[order_[pos - 1]] : 1;
    for (int c = first; c <= chi_; ++c) {
      if (!try_assign(v, c)) continue;
      if (dfs(pos + 1)) {
        unassign(v, c);
        return true;
      }
      unassign(v, c);
    }
    return false;
  }

  bool try_assign(int v, int c) {
    int own = ecount_[static_cast<std::size_t>(v) * (chi_ + 1) + c];
    for (int u : int_adj_[v])
      if (col_[u] == c) {
        ++own;
        if (same_[u] + 1 > delta_) return false;
      }
    if (own > delta_) return false;
    for (int e : end_nbrs_[v]) {
      if (add_[slot(e, c)] + 1 > hi_[slot(e, c)]) return false;
      for (int c2 = 1; c2 <= chi_; ++c2) {
        int s = slot(e, c2);
        if (lo_[s] > 0 && add_[s] + (c2 == c ? 1 : 0) + rem_[e] - 1 < lo_[s]) return false;
      }
    }
    col_[v] = c;
    same_[v] = own;
    for (int u : int_adj_[v])
      if (col_[u] == c) ++same_[u];
    for (int e : end_nbrs_[v]) {
      ++add_[slot(e, c)];
      --rem_[e];
    }
    return true;
  }

  void unassign(int v, int c) {
    for (int u : int_adj_[v])
      if (u != v && col_[u] == c) --same_[u];
    for (int e : end_nbrs_[v]) {
      --add_[slot(e, c)];
      ++rem_[e];
    }
    col_[v] = 0;
  }

  int chi_, delta_, n_ = 0;
  std::vector<std::vector<int>> int_adj_, end_nbrs_;
  std::vector<int> end_int_deg_;
  std::vector<int> order_;
  std::vector<char> chain_;
  std::vector<int> col_, same_, ecount_, add_, lo_, hi_, rem_;
  std::vector<int>* capture_ = nullptr;
  std::unordered_map<std::string, bool> cache_;
};

struct Failure {
  std::size_t host = std::numeric_limits<std::size_t>::max();
  std::string message;
};

std::string describe(const char* direction, const Gadget& g, std::size_t host_idx, const Graph& host,
                     const std::vector<int>& tuple, const std::vector<int>& phi) {
  std::string s = std::string(direction) + " direction violated for " + tag_name(g.tag) +
                  " gadget on host #" + std::to_string(host_idx) + " (n=" +
                  std::to_string(host.num_vertices()) + ", m=" + std::to_string(host.num_edges()) +
                  "): endpoints=(";
  for (std::size_t i = 0; i < tuple.size(); ++i) s += (i ? "," : "") + std::to_string(tuple[i]);
  s += "), host coloring=(";
  for (std::size_t i = 0; i < phi.size(); ++i) s += (i ? "," : "") + std::to_string(phi[i]);
  s += ")";
  return s;
}

}  // namespace

bool verify_gadget_contract(const Gadget& g, int chi, int delta, const std::vector<Graph>& hosts,
                            std::string* why) {
  auto reject = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (chi < 1 || delta < 0) return reject("invalid chi/delta");
  const int total = g.total_endpoints();
  switch (g.tag) {
    case ContractTag::equality:
    case ContractTag::difference:
      if (g.attachments != 2 || g.palette_endpoints != 0) return reject("endpoint layout mismatch");
      break;
    case ContractTag::palette:
      if (g.attachments != 3 || g.palette_endpoints != 0) return reject("endpoint layout mismatch");
      break;
    case ContractTag::exclusion:
    case ContractTag::implication:
      if (g.attachments != 2 || g.palette_endpoints != chi) return reject("endpoint layout mismatch");
      if (g.c1 < 1 || g.c1 > chi || g.c2 < 1 || g.c2 > chi) return reject("palette index out of range");
      break;
  }
  if (g.tag == ContractTag::difference && g.k < 0) return reject("negative difference multiplicity");
  std::vector<std::pair<int, int>> end_end;
  for (const auto& [a, b] : g.edges) {
    if (a == 0 || b == 0 || a > g.internals || b > g.internals || a < -total || b < -total)
      return reject("edge slot out of range");
    if (a == b) return reject("gadget edge is a loop");
    if (a < 0 && b < 0) end_end.emplace_back(-a - 1, -b - 1);
  }

  const int threads = resolve_threads();
  std::atomic<bool> failed{false};
  std::vector<Failure> failures(static_cast<std::size_t>(threads));

  parallel_for(static_cast<std::size_t>(threads), [&](std::size_t chunk) {
    FragmentSolver solver(g, chi, delta);
    std::vector<int> phi, same, tuple, ecol, caps;
    std::vector<std::vector<int>> tuples;
    auto fail = [&](const char* dir, std::size_t host_idx, const Graph& host) {
      if (host_idx < failures[chunk].host) {
        failures[chunk].host = host_idx;
        failures[chunk].message = describe(dir, g, host_idx, host, tuple, phi);
      }
      failed.store(true, std::memory_order_relaxed);
    };

    for (std::size_t host_idx = chunk; host_idx < hosts.size() && !failed.load(std::memory_order_relaxed);
         host_idx += static_cast<std::size_t>(threads)) {
      const Graph& host = hosts[host_idx];
      const int n = host.num_vertices();
      if (n < total) continue;

      tuples.clear();
      tuple.assign(static_cast<std::size_t>(total), 0);
      std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
      auto gen = [&](auto&& self, int depth) -> void {
        if (depth == total) {
          tuples.push_back(tuple);
          return;
        }
        for (int v = 1; v <= n; ++v) {
          if (used[static_cast<std::size_t>(v)]) continue;
          used[static_cast<std::size_t>(v)] = 1;
          tuple[static_cast<std::size_t>(depth)] = v;
          self(self, depth + 1);
          used[static_cast<std::size_t>(v)] = 0;
        }
      };
      gen(gen, 0);

      phi.assign(static_cast<std::size_t>(n), 1);
      same.assign(static_cast<std::size_t>(n), 0);
      bool more = true;
      while (more && !failed.load(std::memory_order_relaxed)) {
        bool host_valid = true;
        for (int v = 1; v <= n && host_valid; ++v) {
          int cnt = 0;
          for (Vertex u : host.neighbors(v)) cnt += (phi[static_cast<std::size_t>(u) - 1] == phi[static_cast<std::size_t>(v) - 1]);
          same[static_cast<std::size_t>(v) - 1] = cnt;
          if (cnt > delta) host_valid = false;
        }
        if (host_valid) {
          for (const auto& t : tuples) {
            tuple = t;
            ecol.resize(static_cast<std::size_t>(total));
            caps.resize(static_cast<std::size_t>(total));
            for (int e = 0; e < total; ++e) {
              ecol[static_cast<std::size_t>(e)] = phi[static_cast<std::size_t>(t[static_cast<std::size_t>(e)]) - 1];
              caps[static_cast<std::size_t>(e)] = delta - same[static_cast<std::size_t>(t[static_cast<std::size_t>(e)]) - 1];
            }
            bool extra_same = false;  // a gadget edge between same-colored endpoints
            for (const auto& [e1, e2] : end_end) {
              if (ecol[static_cast<std::size_t>(e1)] == ecol[static_cast<std::size_t>(e2)] &&
                  !host.adjacent(t[static_cast<std::size_t>(e1)], t[static_cast<std::size_t>(e2)])) {
                --caps[static_cast<std::size_t>(e1)];
                --caps[static_cast<std::size_t>(e2)];
                extra_same = true;
              }
            }
            bool spliced_host_valid = true;
            for (int e = 0; e < total; ++e)
              if (caps[static_cast<std::size_t>(e)] < 0) spliced_host_valid = false;

            std::vector<Bound> cap_bounds;
            for (int e = 0; e < total; ++e)
              cap_bounds.push_back({e, ecol[static_cast<std::size_t>(e)], 0, caps[static_cast<std::size_t>(e)]});
            auto with = [&](std::initializer_list<Bound> extra) {
              std::vector<Bound> b = cap_bounds;
              b.insert(b.end(), extra);
              return b;
            };
            auto neutral = [&]() {
              std::vector<Bound> b = cap_bounds;
              for (int e = 0; e < total; ++e) b.push_back({e, ecol[static_cast<std::size_t>(e)], 0, 0});
              return b;
            };

            switch (g.tag) {
              case ContractTag::equality:
                if (ecol[0] != ecol[1]) {
                  if (spliced_host_valid && solver.extension_exists(ecol, cap_bounds)) {
                    fail("forcing", host_idx, host);
                  }
                } else if (extra_same || !solver.extension_exists(ecol, neutral())) {
                  fail("extension", host_idx, host);
                }
                break;
              case ContractTag::palette:
                if (ecol[0] != ecol[1] && ecol[0] != ecol[2] && ecol[1] != ecol[2]) {
                  if (spliced_host_valid && solver.extension_exists(ecol, cap_bounds)) {
                    fail("forcing", host_idx, host);
                  }
                } else if (extra_same || !solver.extension_exists(ecol, neutral())) {
                  fail("extension", host_idx, host);
                }
                break;
              case ContractTag::difference: {
                // Every valid spliced coloring hands the second endpoint
                // exactly k internal neighbors of the first endpoint's color.
                if (spliced_host_valid) {
                  if (g.k >= 1 && solver.extension_exists(ecol, with({{1, ecol[0], 0, g.k - 1}}))) {
                    fail("forcing", host_idx, host);
                    break;
                  }
                  if (solver.extension_exists(ecol, with({{1, ecol[0], g.k + 1, kNoLimit}}))) {
                    fail("forcing", host_idx, host);
                    break;
                  }
                  if (g.k >= delta + 1 && ecol[0] == ecol[1] &&
                      solver.extension_exists(ecol, cap_bounds)) {
                    fail("forcing", host_idx, host);
                    break;
                  }
                }
                bool feasible = ecol[0] != ecol[1] ? true : g.k <= caps[1];
                if (feasible) {
                  std::vector<Bound> b = with({{0, ecol[0], 0, 0}, {1, ecol[0], g.k, g.k}});
                  if (ecol[1] != ecol[0]) b.push_back({1, ecol[1], 0, 0});
                  if (extra_same || !solver.extension_exists(ecol, b)) fail("extension", host_idx, host);
                }
                break;
              }
              case ContractTag::exclusion:
              case ContractTag::implication: {
                bool rainbow = true;
                for (int i = 0; i < g.palette_endpoints && rainbow; ++i)
                  for (int j = i + 1; j < g.palette_endpoints; ++j)
                    if (ecol[static_cast<std::size_t>(2 + i)] == ecol[static_cast<std::size_t>(2 + j)]) {
                      rainbow = false;
                      break;
                    }
                if (!rainbow) break;
                int pal1 = ecol[static_cast<std::size_t>(2 + g.c1 - 1)];
                int pal2 = ecol[static_cast<std::size_t>(2 + g.c2 - 1)];
                bool bad = (g.tag == ContractTag::exclusion)
                               ? (ecol[0] == pal1 && ecol[1] == pal2)
                               : (ecol[0] == pal1 && ecol[1] != pal2);
                if (bad) {
                  if (spliced_host_valid && solver.extension_exists(ecol, cap_bounds)) {
                    fail("forcing", host_idx, host);
                  }
                } else if (extra_same || !solver.extension_exists(ecol, neutral())) {
                  fail("extension", host_idx, host);
                }
                break;
              }
            }
            if (failed.load(std::memory_order_relaxed)) break;
          }
        }
        // Next coloring (odometer over colors 1..chi).
        more = false;
        for (std::size_t d = 0; d < phi.size(); ++d) {
          if (phi[d] < chi) {
            ++phi[d];
            std::fill(phi.begin(), phi.begin() + static_cast<std::ptrdiff_t>(d), 1);
            more = true;
            break;
          }
        }
      }
    }
  }, threads);

  if (failed.load()) {
    const Failure* best = nullptr;
    for (const auto& f : failures)
      if (f.host != std::numeric_limits<std::size_t>::max() && (!best || f.host < best->host)) best = &f;
    return reject(best ? best->message : "contract violated");
  }
  return true;
}

std::vector<int> complete_gadget_interior(const Gadget& g, const std::vector<int>& endpoint_colors) {
  const int total = g.total_endpoints();
  if (static_cast<int>(endpoint_colors.size()) != total)
    throw Error(Errc::invalid_argument, "complete_gadget_interior: expected " + std::to_string(total) +
                                            " endpoint colors, got " + std::to_string(endpoint_colors.size()));
  for (int c : endpoint_colors)
    if (c < 1 || c > g.chi)
      throw Error(Errc::invalid_argument, "complete_gadget_interior: endpoint color out of range");
  const bool equal_difference =
      g.tag == ContractTag::difference && endpoint_colors[0] == endpoint_colors[1];
  if (equal_difference && g.k > g.delta)
    throw Error(Errc::contract_violation,
                "difference gadget with multiplicity " + std::to_string(g.k) +
                    " > delta requires distinct endpoint colors");
  FragmentSolver solver(g, g.chi, g.delta);
  std::vector<Bound> bounds;
  bounds.reserve(static_cast<std::size_t>(total));
  for (int e = 0; e < total; ++e) {
    int target = (equal_difference && e == 1) ? g.k : 0;
    bounds.push_back({e, endpoint_colors[e], target, target});
  }
  std::vector<int> witness;
  solver.capture_witness(&witness);
  if (!solver.extension_exists(endpoint_colors, bounds))
    throw Error(Errc::contract_violation, std::string("no interior coloring: ") + tag_name(g.tag) +
                                              " gadget contract excludes these endpoint colors");
  return witness;
}

}  // namespace degbound
