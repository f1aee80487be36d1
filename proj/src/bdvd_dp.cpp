#include "degbound/bdvd_dp.hpp"

#include <algorithm>

#include "degbound/util.hpp"

namespace degbound {

namespace {

constexpr std::uint8_t kDeleted = 0;

int position_of(const VertexSet& bag, Vertex v) {
  auto it = std::lower_bound(bag.begin(), bag.end(), v);
  if (it == bag.end() || *it != v) return -1;
  return static_cast<int>(it - bag.begin());
}

std::vector<std::vector<int>> bag_adjacency(const Graph& g, const VertexSet& bag) {
  int s = static_cast<int>(bag.size());
  std::vector<std::vector<int>> adj(s);
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      if (g.adjacent(bag[i], bag[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  return adj;
}

struct Limits {
  int delta;
  std::optional<int> budget;

  bool over(int cost) const { return budget && cost > *budget; }
};

void offer(BdvdTable& t, BdvdKey key, int cost, BdvdKey c1, BdvdKey c2, const Limits& lim) {
  if (lim.over(cost)) return;
  auto it = t.entries.find(key);
  if (it != t.entries.end() && it->second.cost <= cost) return;
  t.entries[std::move(key)] = BdvdEntry{cost, std::move(c1), std::move(c2)};
}

BdvdTable op_leaf(Vertex v, const Limits& lim, int delta) {
  BdvdTable t;
  t.bag = {v};
  t.delta = delta;
  offer(t, {kDeleted}, 1, {}, {}, lim);
  offer(t, {1}, 0, {}, {}, lim);  // kept, no forgotten neighbors yet
  return t;
}

BdvdTable op_introduce(const BdvdTable& child, Vertex v, const Limits& lim) {
  if (position_of(child.bag, v) != -1)
    throw Error(Errc::invalid_argument, "introduce: vertex already in the bag");
  BdvdTable out;
  out.delta = child.delta;
  out.bag = child.bag;
  out.bag.insert(std::upper_bound(out.bag.begin(), out.bag.end(), v), v);
  int p = position_of(out.bag, v);
  int s = static_cast<int>(out.bag.size());
  BdvdKey key(static_cast<std::size_t>(s));
  for (const auto& [ck, entry] : child.entries) {
    for (int j = 0; j < p; ++j) key[j] = ck[j];
    for (int j = p + 1; j < s; ++j) key[j] = ck[j - 1];
    key[p] = kDeleted;
    offer(out, key, entry.cost + 1, ck, {}, lim);
    key[p] = 1;  // kept; degree feasibility is settled when v is forgotten
    offer(out, key, entry.cost, ck, {}, lim);
  }
  return out;
}

BdvdTable op_forget(const Graph& g, const BdvdTable& child, Vertex v, const Limits& lim) {
  int p = position_of(child.bag, v);
  if (p == -1) throw Error(Errc::invalid_argument, "forget: vertex not in the bag");
  BdvdTable out;
  out.delta = child.delta;
  out.bag = child.bag;
  out.bag.erase(out.bag.begin() + p);
  auto child_adj = bag_adjacency(g, child.bag);
  const auto& vnbrs = child_adj[p];
  int s = static_cast<int>(out.bag.size());
  BdvdKey key(static_cast<std::size_t>(s));
  for (const auto& [ck, entry] : child.entries) {
    for (int j = 0; j < p; ++j) key[j] = ck[j];
    for (int j = p; j < s; ++j) key[j] = ck[j + 1];
    if (ck[p] != kDeleted) {
      // v stays: its final degree is j plus the kept bag neighbors, each of
      // which in turn gains a forgotten kept neighbor
      int kept_here = 0;
      bool ok = true;
      for (int j : vnbrs)
        if (ck[j] != kDeleted) {
          ++kept_here;
          if (ck[j] - 1 + 1 > child.delta) {
            ok = false;
            break;
          }
          key[j < p ? j : j - 1] = static_cast<std::uint8_t>(ck[j] + 1);
        }
      if (!ok || ck[p] - 1 + kept_here > child.delta) {
        // restore the copied bytes clobbered above before the next entry
        for (int j : vnbrs)
          if (j != p) key[j < p ? j : j - 1] = ck[j];
        continue;
      }
    }
    offer(out, key, entry.cost, ck, {}, lim);
    for (int j : vnbrs)
      if (j != p) key[j < p ? j : j - 1] = ck[j];
  }
  return out;
}

BdvdTable op_join(const BdvdTable& a, const BdvdTable& b, const Limits& lim) {
  if (a.bag != b.bag || a.delta != b.delta)
    throw Error(Errc::invalid_argument, "join: tables disagree on bag or parameters");
  BdvdTable out;
  out.bag = a.bag;
  out.delta = a.delta;
  int s = static_cast<int>(a.bag.size());

  // bucket one side by its deleted/kept pattern
  auto pattern = [&](const BdvdKey& k) {
    BdvdKey p = k;
    for (auto& byte : p) byte = byte == kDeleted ? kDeleted : 1;
    return p;
  };
  using Side = std::vector<std::pair<const BdvdKey*, const BdvdEntry*>>;
  std::unordered_map<BdvdKey, Side, BdvdKeyHash> by_pattern;
  for (const auto& [k, e] : b.entries) by_pattern[pattern(k)].push_back({&k, &e});

  BdvdKey key(static_cast<std::size_t>(s));
  for (const auto& [k1, e1] : a.entries) {
    auto it = by_pattern.find(pattern(k1));
    if (it == by_pattern.end()) continue;
    int deleted_in_bag = 0;
    for (int j = 0; j < s; ++j) deleted_in_bag += k1[j] == kDeleted;
    for (const auto& [k2, e2] : it->second) {
      bool ok = true;
      for (int j = 0; j < s; ++j) {
        if (k1[j] == kDeleted) {
          key[j] = kDeleted;
          continue;
        }
        int jsum = (k1[j] - 1) + ((*k2)[j] - 1);  // forgotten kept neighbors add up
        if (jsum > a.delta) {
          ok = false;
          break;
        }
        key[j] = static_cast<std::uint8_t>(1 + jsum);
      }
      if (!ok) continue;
      offer(out, key, e1.cost + e2->cost - deleted_in_bag, k1, *k2, lim);
    }
  }
  return out;
}

// An entry with the same deleted/kept pattern, componentwise no larger used
// degrees, and no larger cost reaches every solution a dominated entry does,
// at no larger cost — dropping the dominated entry preserves k_min exactly.
// Runs before any parent table reads this one, so surviving traceback
// pointers only ever name surviving child entries.
void prune_dominated(BdvdTable& t) {
  if (t.entries.size() < 2) return;
  std::unordered_map<BdvdKey, std::vector<std::pair<const BdvdKey*, int>>, BdvdKeyHash> groups;
  groups.reserve(t.entries.size());
  for (const auto& [k, e] : t.entries) {
    BdvdKey pat = k;
    for (auto& byte : pat) byte = byte == kDeleted ? kDeleted : 1;
    groups[std::move(pat)].push_back({&k, e.cost});
  }
  std::vector<BdvdKey> doomed;
  std::vector<std::pair<const BdvdKey*, int>> kept;
  auto byte_sum = [](const BdvdKey& k) {
    int s = 0;
    for (std::uint8_t b : k) s += b;
    return s;
  };
  for (auto& [pat, keys] : groups) {
    if (keys.size() < 2) continue;
    // A dominator sorts strictly earlier: it never costs more, and within
    // equal cost its byte sum is no larger (equal sums mean equal keys).
    std::sort(keys.begin(), keys.end(),
              [&](const std::pair<const BdvdKey*, int>& x, const std::pair<const BdvdKey*, int>& y) {
                if (x.second != y.second) return x.second < y.second;
                return byte_sum(*x.first) < byte_sum(*y.first);
              });
    kept.clear();
    for (const auto& [k, cost] : keys) {
      bool dominated = false;
      for (const auto& [low, low_cost] : kept) {
        if (low_cost > cost) continue;
        bool all = true;
        for (std::size_t j = 0; all && j < k->size(); ++j)
          if ((*low)[j] > (*k)[j]) all = false;
        if (all) {
          dominated = true;
          break;
        }
      }
      if (dominated)
        doomed.push_back(*k);
      else
        kept.push_back({k, cost});
    }
  }
  for (const BdvdKey& k : doomed) t.entries.erase(k);
}

VertexSet traceback(const NiceTreeDecomposition& ntd, const std::vector<BdvdTable>& tables) {
  VertexSet removed;
  std::vector<std::pair<int, BdvdKey>> stack;
  stack.push_back({ntd.root(), BdvdKey{}});
  while (!stack.empty()) {
    auto [i, key] = std::move(stack.back());
    stack.pop_back();
    const NiceNode& nd = ntd.nodes[i];
    auto it = tables[i].entries.find(key);
    if (it == tables[i].entries.end())
      throw Error(Errc::contract_violation, "witness traceback lost an entry");
    const BdvdEntry& e = it->second;
    switch (nd.kind) {
      case NodeKind::Leaf:
        break;
      case NodeKind::Introduce:
        stack.push_back({nd.child1, e.child1});
        break;
      case NodeKind::Forget: {
        int p = position_of(tables[nd.child1].bag, nd.vertex);
        if (e.child1[p] == kDeleted) removed.push_back(nd.vertex);
        stack.push_back({nd.child1, e.child1});
        break;
      }
      case NodeKind::Join:
        stack.push_back({nd.child1, e.child1});
        stack.push_back({nd.child2, e.child2});
        break;
    }
  }
  std::sort(removed.begin(), removed.end());
  return removed;
}

}  // namespace

BdvdResult bdvd_solve(const Graph& g, const NiceTreeDecomposition& ntd, int delta,
                      const BdvdOptions& opts) {
  if (delta < 0) throw Error(Errc::invalid_argument, "bdvd_solve: delta must be nonnegative");
  if (delta + 2 > 255)
    throw Error(Errc::not_implemented, "bdvd_solve: delta exceeds the packed byte encoding");
  if (g.has_any_loop()) throw Error(Errc::invalid_argument, "bdvd_solve: graph has self-loops");
  if (ntd.nodes.empty()) throw Error(Errc::invalid_argument, "bdvd_solve: empty decomposition");
  if (!ntd.nodes[ntd.root()].bag.empty())
    throw Error(Errc::invalid_argument, "bdvd_solve: root bag must be empty");
  if (opts.budget && *opts.budget < 0) throw Error(Errc::invalid_argument, "bdvd_solve: negative budget");

  Limits lim{delta, opts.budget};
  std::vector<BdvdTable> tables(ntd.nodes.size());
  BdvdResult result;
  for (std::size_t i = 0; i < ntd.nodes.size(); ++i) {
    const NiceNode& nd = ntd.nodes[i];
    switch (nd.kind) {
      case NodeKind::Leaf:
        tables[i] = op_leaf(nd.vertex, lim, delta);
        break;
      case NodeKind::Introduce:
        tables[i] = op_introduce(tables[nd.child1], nd.vertex, lim);
        break;
      case NodeKind::Forget:
        tables[i] = op_forget(g, tables[nd.child1], nd.vertex, lim);
        break;
      case NodeKind::Join:
        tables[i] = op_join(tables[nd.child1], tables[nd.child2], lim);
        break;
    }
    prune_dominated(tables[i]);
    result.peak_table_entries = std::max(result.peak_table_entries, tables[i].entries.size());
    if (!opts.want_witness) {
      if (nd.child1 >= 0) tables[nd.child1] = BdvdTable{};
      if (nd.child2 >= 0) tables[nd.child2] = BdvdTable{};
    }
  }
  const BdvdTable& root = tables[ntd.root()];
  auto it = root.entries.find(BdvdKey{});
  if (it == root.entries.end()) return result;  // only possible under a budget
  result.k_min = it->second.cost;
  if (opts.want_witness) result.witness = traceback(ntd, tables);
  return result;
}

int bdvd_min(const Graph& g, const NiceTreeDecomposition& ntd, int delta) {
  BdvdOptions opts;
  opts.want_witness = false;
  return *bdvd_solve(g, ntd, delta, opts).k_min;
}

bool bdvd_decide(const Graph& g, const NiceTreeDecomposition& ntd, int delta, int budget,
                 VertexSet* witness) {
  BdvdOptions opts;
  opts.budget = budget;
  opts.want_witness = witness != nullptr;
  BdvdResult r = bdvd_solve(g, ntd, delta, opts);
  if (!r.k_min) return false;
  if (witness && r.witness) *witness = *r.witness;
  return true;
}

}  // namespace degbound
