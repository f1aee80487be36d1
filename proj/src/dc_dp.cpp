#include "degbound/dc_dp.hpp"

#include <algorithm>
#include <cstring>

#include "degbound/ntt.hpp"

namespace degbound {

namespace {

int position_of(const VertexSet& bag, Vertex v) {
  auto it = std::lower_bound(bag.begin(), bag.end(), v);
  if (it == bag.end() || *it != v) return -1;
  return static_cast<int>(it - bag.begin());
}

// Positions of bag members adjacent to each bag member.
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

void require_compatible(const DcTable& a, const DcTable& b) {
  if (a.bag != b.bag || a.chi != b.chi || a.delta != b.delta)
    throw Error(Errc::invalid_argument, "join: tables disagree on bag or parameters");
}

void require_params(int chi, int delta) {
  if (chi < 1 || delta < 0) throw Error(Errc::invalid_argument, "need chi >= 1 and delta >= 0");
  if (chi * (delta + 1) > 255)
    throw Error(Errc::not_implemented, "state space per vertex exceeds the packed byte encoding");
}

// Entries of one side of a join with the same bag coloring.
struct ColorGroup {
  std::vector<std::pair<const DcKey*, const Bigint*>> a, b;
};

// Same-colored bag neighbor counts for a fixed coloring (bytes carry colors).
std::vector<int> in_bag_same_color(const DcKey& any_key, const DcTable& t,
                                   const std::vector<std::vector<int>>& adj) {
  int s = static_cast<int>(any_key.size());
  std::vector<int> cnt(s, 0);
  for (int j = 0; j < s; ++j) {
    int cj = t.color_of(any_key[j]);
    for (int j2 : adj[j])
      if (t.color_of(any_key[j2]) == cj) ++cnt[j];
  }
  return cnt;
}

std::unordered_map<DcKey, ColorGroup, DcKeyHash> group_by_coloring(const DcTable& a, const DcTable& b) {
  std::unordered_map<DcKey, ColorGroup, DcKeyHash> groups;
  int base = a.delta + 1;
  auto color_key = [&](const DcKey& k) {
    DcKey ck = k;
    for (auto& byte : ck) byte -= byte % base;
    return ck;
  };
  for (const auto& [k, cnt] : a.entries) groups[color_key(k)].a.push_back({&k, &cnt});
  for (const auto& [k, cnt] : b.entries) {
    auto it = groups.find(color_key(k));
    if (it != groups.end()) it->second.b.push_back({&k, &cnt});  // one-sided colorings cannot join
  }
  return groups;
}

}  // namespace

std::uint64_t dc_identifier(const std::vector<int>& deficiencies, int delta) {
  std::uint64_t base = static_cast<std::uint64_t>(delta) + 1;
  std::uint64_t id = 0, pw = 1;
  for (std::size_t j = 0; j < deficiencies.size(); ++j) {
    id += static_cast<std::uint64_t>(deficiencies[j]) * pw;
    pw *= base;
  }
  return id;
}

int dc_digit_sum(std::uint64_t identifier, int positions, int delta) {
  std::uint64_t base = static_cast<std::uint64_t>(delta) + 1;
  if (base == 1) return identifier == 0 ? 0 : -1;
  int sum = 0;
  for (int j = 0; j < positions; ++j) {
    sum += static_cast<int>(identifier % base);
    identifier /= base;
  }
  return identifier == 0 ? sum : -1;
}

DcTable dc_leaf(Vertex v, int chi, int delta) {
  require_params(chi, delta);
  DcTable t;
  t.bag = {v};
  t.chi = chi;
  t.delta = delta;
  for (int c = 1; c <= chi; ++c) t.entries[{t.pack(c, 0)}] = 1;
  return t;
}

DcTable dc_introduce(const Graph& g, const DcTable& child, Vertex v) {
  if (position_of(child.bag, v) != -1)
    throw Error(Errc::invalid_argument, "introduce: vertex already in the bag");
  DcTable out;
  out.chi = child.chi;
  out.delta = child.delta;
  out.bag = child.bag;
  out.bag.insert(std::upper_bound(out.bag.begin(), out.bag.end(), v), v);
  int p = position_of(out.bag, v);
  int s = static_cast<int>(out.bag.size());
  auto adj = bag_adjacency(g, out.bag);
  const auto& vnbrs = adj[p];  // new-bag positions adjacent to v
  int delta_cap = out.delta;

  std::vector<int> child_pos_same(vnbrs.size());  // same-color counts of v's neighbors, without v
  DcKey key(static_cast<std::size_t>(s));
  for (const auto& [ck, cnt] : child.entries) {
    // colors of v's bag neighbors and their same-color loads in the child bag
    for (std::size_t t = 0; t < vnbrs.size(); ++t) {
      int j = vnbrs[t];
      int cj = out.color_of(ck[j < p ? j : j - 1]);
      int same = 0;
      for (int j2 : adj[j]) {
        if (j2 == p) continue;
        if (out.color_of(ck[j2 < p ? j2 : j2 - 1]) == cj) ++same;
      }
      child_pos_same[t] = same;
    }
    for (int j = 0; j < p; ++j) key[j] = ck[j];
    for (int j = p + 1; j < s; ++j) key[j] = ck[j - 1];
    for (int c = 1; c <= out.chi; ++c) {
      int v_same = 0;
      bool ok = true;
      for (std::size_t t = 0; t < vnbrs.size() && ok; ++t) {
        int j = vnbrs[t];
        std::uint8_t state = ck[j < p ? j : j - 1];
        if (out.color_of(state) != c) continue;
        ++v_same;
        // neighbor j gains one same-colored bag neighbor
        if (out.deficiency_of(state) + child_pos_same[t] + 1 > delta_cap) ok = false;
      }
      if (!ok || v_same > delta_cap) continue;  // the introduced vertex enters with deficiency 0
      key[p] = out.pack(c, 0);
      out.entries[key] += cnt;
    }
  }
  return out;
}

DcTable dc_forget(const Graph& g, const DcTable& child, Vertex v) {
  int p = position_of(child.bag, v);
  if (p == -1) throw Error(Errc::invalid_argument, "forget: vertex not in the bag");
  DcTable out;
  out.chi = child.chi;
  out.delta = child.delta;
  out.bag = child.bag;
  out.bag.erase(out.bag.begin() + p);
  auto child_adj = bag_adjacency(g, child.bag);
  const auto& vnbrs = child_adj[p];
  int s = static_cast<int>(out.bag.size());

  DcKey key(static_cast<std::size_t>(s));
  for (const auto& [ck, cnt] : child.entries) {
    int cv = child.color_of(ck[p]);
    for (int j = 0; j < p; ++j) key[j] = ck[j];
    for (int j = p; j < s; ++j) key[j] = ck[j + 1];
    bool ok = true;
    // forgetting v raises the deficiency of its same-colored bag neighbors
    for (int j : vnbrs) {
      std::uint8_t state = ck[j];
      if (child.color_of(state) != cv) continue;
      if (child.deficiency_of(state) + 1 > child.delta) {
        ok = false;
        break;
      }
      key[j < p ? j : j - 1] = state + 1;  // same color, deficiency + 1
    }
    if (ok) out.entries[key] += cnt;
  }
  return out;
}

DcTable dc_join_naive(const Graph& g, const DcTable& a, const DcTable& b) {
  require_compatible(a, b);
  DcTable out;
  out.bag = a.bag;
  out.chi = a.chi;
  out.delta = a.delta;
  int s = static_cast<int>(a.bag.size());
  int base = a.delta + 1;
  auto adj = bag_adjacency(g, a.bag);
  auto groups = group_by_coloring(a, b);
  DcKey key(static_cast<std::size_t>(s));
  for (const auto& [ck, grp] : groups) {
    if (grp.a.empty() || grp.b.empty()) continue;
    std::vector<int> same = in_bag_same_color(ck, a, adj);
    std::vector<int> cap(s);
    for (int j = 0; j < s; ++j) cap[j] = a.delta - same[j];
    for (const auto& [k1, c1] : grp.a)
      for (const auto& [k2, c2] : grp.b) {
        bool ok = true;
        for (int j = 0; j < s; ++j) {
          int d = (*k1)[j] % base + (*k2)[j] % base;
          if (d > cap[j]) {
            ok = false;
            break;
          }
          key[j] = ck[j] + static_cast<std::uint8_t>(d);
        }
        if (ok) out.entries[key] += *c1 * *c2;
      }
  }
  return out;
}

namespace {

// One (identifier, count) term of a bucket polynomial.
struct Term {
  std::uint64_t id;
  const Bigint* count;
};

constexpr std::uint64_t kDenseLimit = 1ull << 20;  // transform cap on (delta+1)^|bag|
constexpr int kTwoAdicity = 21;

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > (std::uint64_t(1) << 62) / base)
      throw Error(Errc::not_implemented, "join: identifier space exceeds 64-bit arithmetic");
    r *= base;
  }
  return r;
}

std::size_t bit_length(const Bigint& x) { return x == 0 ? 1 : static_cast<std::size_t>(msb(x)) + 1; }

// Accepted coefficient sink: decodes an exponent into deficiencies, applies
// the in-bag degree check and stores the tuple.
struct Materializer {
  DcTable* out;
  const DcKey* colors;
  const std::vector<int>* same;
  int s, base;

  void add(std::uint64_t e, Bigint&& coeff) {
    DcKey key(*colors);
    std::uint64_t rem = e;
    for (int j = 0; j < s; ++j) {
      int d = static_cast<int>(rem % base);
      rem /= base;
      if (d + (*same)[j] > out->delta) return;  // joined load exceeds delta
      key[j] = static_cast<std::uint8_t>(key[j] + d);
    }
    auto& slot = out->entries[key];
    slot += coeff;
    if (slot == 0) out->entries.erase(key);
  }
};

void join_group_schoolbook(const std::vector<std::vector<Term>>& buck_a,
                           const std::vector<std::vector<Term>>& buck_b, int s, int delta,
                           Materializer& sink) {
  std::unordered_map<std::uint64_t, Bigint> acc;
  int smax_out = s * delta;
  for (int s1 = 0; s1 < static_cast<int>(buck_a.size()); ++s1) {
    if (buck_a[s1].empty()) continue;
    for (int s2 = 0; s2 < static_cast<int>(buck_b.size()); ++s2) {
      if (buck_b[s2].empty()) continue;
      int sigma = s1 + s2;
      if (sigma > smax_out) continue;  // no carry-free product can reach this digit sum
      for (const Term& ta : buck_a[s1])
        for (const Term& tb : buck_b[s2]) {
          std::uint64_t e = ta.id + tb.id;
          // carry test: the product is kept iff the digit sum is additive
          if (dc_digit_sum(e, s, delta) == sigma) acc[e] += *ta.count * *tb.count;
        }
    }
  }
  for (auto& [e, coeff] : acc)
    if (coeff != 0) sink.add(e, std::move(coeff));
}

void join_group_ntt(const std::vector<std::vector<Term>>& buck_a,
                    const std::vector<std::vector<Term>>& buck_b, int s, int delta,
                    std::uint64_t space, Materializer& sink) {
  int smax = s * delta;
  // digit sums of every identifier, then the accepted exponents per class
  std::vector<std::uint8_t> ds(space);
  std::uint64_t base = static_cast<std::uint64_t>(delta) + 1;
  for (std::uint64_t e = 1; e < space; ++e) ds[e] = static_cast<std::uint8_t>(ds[e / base] + e % base);
  std::vector<std::vector<std::uint32_t>> accepted(smax + 1);
  for (std::uint64_t e = 0; e < space; ++e) accepted[ds[e]].push_back(static_cast<std::uint32_t>(e));

  std::size_t len = 1;
  while (len < 2 * space - 1) len <<= 1;

  // enough primes for max_a * max_b * min(nnz_a, nnz_b)
  Bigint max_a = 0, max_b = 0;
  std::size_t nnz_a = 0, nnz_b = 0;
  for (const auto& v : buck_a)
    for (const Term& t : v) {
      if (*t.count > max_a) max_a = *t.count;
      ++nnz_a;
    }
  for (const auto& v : buck_b)
    for (const Term& t : v) {
      if (*t.count > max_b) max_b = *t.count;
      ++nnz_b;
    }
  std::size_t bound_bits = bit_length(max_a) + bit_length(max_b) + 64 - __builtin_clzll(std::min(nnz_a, nnz_b)) + 1;
  int nprimes = static_cast<int>((bound_bits + 60) / 61);
  auto primes = ntt::find_primes(nprimes, kTwoAdicity);

  // residues of every accepted output exponent, laid out [sigma][idx * nprimes + i]
  std::vector<std::vector<std::uint64_t>> res(smax + 1);
  for (int sg = 0; sg <= smax; ++sg) res[sg].assign(accepted[sg].size() * nprimes, 0);

  std::vector<std::uint64_t> acc(len);
  for (int pi = 0; pi < nprimes; ++pi) {
    const auto& pr = primes[pi];
    auto lift = [&](const std::vector<std::vector<Term>>& bucks) {
      std::vector<std::vector<std::uint64_t>> f(bucks.size());
      for (std::size_t sg = 0; sg < bucks.size(); ++sg) {
        if (bucks[sg].empty()) continue;
        f[sg].assign(len, 0);
        for (const Term& t : bucks[sg]) f[sg][t.id] = (*t.count % pr.p).convert_to<std::uint64_t>();
        ntt::transform(f[sg], pr, false);
      }
      return f;
    };
    auto fa = lift(buck_a);
    auto fb = lift(buck_b);
    for (int sigma = 0; sigma <= smax; ++sigma) {
      if (accepted[sigma].empty()) continue;
      bool any = false;
      std::fill(acc.begin(), acc.end(), 0);
      for (int s1 = std::max(0, sigma - static_cast<int>(buck_b.size()) + 1);
           s1 < static_cast<int>(buck_a.size()) && s1 <= sigma; ++s1) {
        int s2 = sigma - s1;
        if (fa[s1].empty() || fb[s2].empty()) continue;
        any = true;
        const auto* va = fa[s1].data();
        const auto* vb = fb[s2].data();
        for (std::size_t i = 0; i < len; ++i) {
          std::uint64_t t = acc[i] + ntt::mulmod(va[i], vb[i], pr.p);
          acc[i] = t >= pr.p ? t - pr.p : t;
        }
      }
      if (!any) continue;
      ntt::transform(acc, pr, true);
      auto& slot = res[sigma];
      for (std::size_t idx = 0; idx < accepted[sigma].size(); ++idx)
        slot[idx * nprimes + pi] = acc[accepted[sigma][idx]];
    }
  }

  std::vector<std::uint64_t> residues(nprimes);
  for (int sigma = 0; sigma <= smax; ++sigma) {
    for (std::size_t idx = 0; idx < accepted[sigma].size(); ++idx) {
      bool all_zero = true;
      for (int pi = 0; pi < nprimes; ++pi) {
        residues[pi] = res[sigma][idx * nprimes + pi];
        if (residues[pi] != 0) all_zero = false;
      }
      if (all_zero) continue;
      Bigint coeff = ntt::crt(residues, primes);
      if (coeff != 0) sink.add(accepted[sigma][idx], std::move(coeff));
    }
  }
}

}  // namespace

DcTable dc_join_fast(const Graph& g, const DcTable& a, const DcTable& b, JoinBackend backend) {
  require_compatible(a, b);
  if (backend == JoinBackend::naive) return dc_join_naive(g, a, b);
  DcTable out;
  out.bag = a.bag;
  out.chi = a.chi;
  out.delta = a.delta;
  int s = static_cast<int>(a.bag.size());
  int base = a.delta + 1;
  int smax = s * a.delta;
  std::uint64_t space = checked_pow(static_cast<std::uint64_t>(base), s);
  auto adj = bag_adjacency(g, a.bag);
  auto groups = group_by_coloring(a, b);

  for (const auto& [ck, grp] : groups) {
    if (grp.a.empty() || grp.b.empty()) continue;
    std::vector<int> same = in_bag_same_color(ck, a, adj);
    // bucket both sides by deficiency digit sum
    auto bucketize = [&](const std::vector<std::pair<const DcKey*, const Bigint*>>& side) {
      std::vector<std::vector<Term>> bucks(smax + 1);
      for (const auto& [k, cnt] : side) {
        std::uint64_t id = 0, pw = 1;
        int sigma = 0;
        for (int j = 0; j < s; ++j) {
          int d = (*k)[j] % base;
          id += static_cast<std::uint64_t>(d) * pw;
          pw *= static_cast<std::uint64_t>(base);
          sigma += d;
        }
        bucks[sigma].push_back(Term{id, cnt});
      }
      return bucks;
    };
    auto buck_a = bucketize(grp.a);
    auto buck_b = bucketize(grp.b);

    Materializer sink{&out, &ck, &same, s, base};
    bool want_ntt;
    switch (backend) {
      case JoinBackend::ntt:
        if (space > kDenseLimit)
          throw Error(Errc::invalid_argument, "join: bag too large for the dense transform backend");
        want_ntt = true;
        break;
      case JoinBackend::schoolbook:
        want_ntt = false;
        break;
      default:
        want_ntt = space <= kDenseLimit && space > 1 &&
                   static_cast<std::uint64_t>(grp.a.size()) * grp.b.size() >= (1ull << 14);
    }
    if (want_ntt)
      join_group_ntt(buck_a, buck_b, s, a.delta, space, sink);
    else
      join_group_schoolbook(buck_a, buck_b, s, a.delta, sink);
  }
  return out;
}

// --- full runs ---------------------------------------------------------------

namespace {

void saturate(DcTable& t) {
  for (auto& [k, v] : t.entries)
    if (v > 1) v = 1;
}

// Decision mode only.  With counts saturated, an entry matters exactly when
// some extension of it stays within the deficiency budget; every future open
// to an entry is open to one with the same coloring and componentwise smaller
// deficiency digits, so the dominated entry can be dropped.
void prune_dominated(DcTable& t) {
  if (t.entries.size() < 2) return;
  const int base = t.delta + 1;
  std::unordered_map<DcKey, std::vector<const DcKey*>, DcKeyHash> groups;
  groups.reserve(t.entries.size());
  for (const auto& [k, cnt] : t.entries) {
    (void)cnt;
    DcKey colors = k;
    for (auto& byte : colors) byte = static_cast<std::uint8_t>(byte - byte % base);
    groups[std::move(colors)].push_back(&k);
  }
  std::vector<DcKey> doomed;
  std::vector<const DcKey*> kept;
  auto digit_sum = [](const DcKey& k) {
    int s = 0;
    for (std::uint8_t b : k) s += b;
    return s;
  };
  for (auto& [colors, keys] : groups) {
    if (keys.size() < 2) continue;
    // A dominator never has a larger digit sum, so scanning in sum order
    // against the kept antichain sees every potential dominator in time.
    std::sort(keys.begin(), keys.end(),
              [&](const DcKey* x, const DcKey* y) { return digit_sum(*x) < digit_sum(*y); });
    kept.clear();
    for (const DcKey* k : keys) {
      bool dominated = false;
      for (const DcKey* low : kept) {
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
        kept.push_back(k);
    }
  }
  for (const DcKey& k : doomed) t.entries.erase(k);
}

Coloring traceback(const Graph& g, const NiceTreeDecomposition& ntd,
                   const std::vector<DcTable>& tables) {
  Coloring colors(g.num_vertices(), 0);
  std::vector<std::pair<int, DcKey>> stack;
  stack.push_back({ntd.root(), DcKey{}});
  while (!stack.empty()) {
    auto [i, key] = std::move(stack.back());
    stack.pop_back();
    const NiceNode& nd = ntd.nodes[i];
    switch (nd.kind) {
      case NodeKind::Leaf:
        break;
      case NodeKind::Introduce: {
        int p = position_of(nd.bag, nd.vertex);
        DcKey ck = key;
        ck.erase(ck.begin() + p);
        stack.push_back({nd.child1, std::move(ck)});
        break;
      }
      case NodeKind::Forget: {
        const DcTable& child = tables[nd.child1];
        int p = position_of(child.bag, nd.vertex);
        bool found = false;
        for (const auto& [ck, cnt] : child.entries) {
          (void)cnt;
          int cv = child.color_of(ck[p]);
          bool ok = true;
          for (int j = 0; ok && j < static_cast<int>(ck.size()); ++j) {
            if (j == p) continue;
            int pj = j < p ? j : j - 1;
            int bump = (g.adjacent(child.bag[j], nd.vertex) && child.color_of(ck[j]) == cv) ? 1 : 0;
            if (static_cast<int>(ck[j]) + bump != static_cast<int>(key[pj])) ok = false;
          }
          if (ok) {
            colors[nd.vertex - 1] = cv;
            stack.push_back({nd.child1, ck});
            found = true;
            break;
          }
        }
        if (!found) throw Error(Errc::contract_violation, "witness traceback lost at a forget node");
        break;
      }
      case NodeKind::Join: {
        const DcTable& c1 = tables[nd.child1];
        const DcTable& c2 = tables[nd.child2];
        int base = c1.delta + 1;
        bool found = false;
        for (const auto& [k1, cnt] : c1.entries) {
          (void)cnt;
          bool ok = true;
          DcKey k2(key.size());
          for (std::size_t j = 0; j < key.size(); ++j) {
            int color_byte = key[j] - key[j] % base;
            if (static_cast<int>(k1[j]) - k1[j] % base != color_byte || k1[j] > key[j]) {
              ok = false;
              break;
            }
            k2[j] = static_cast<std::uint8_t>(color_byte + (key[j] % base - k1[j] % base));
          }
          if (!ok) continue;
          if (c2.entries.count(k2)) {
            stack.push_back({nd.child1, k1});
            stack.push_back({nd.child2, std::move(k2)});
            found = true;
            break;
          }
        }
        if (!found) throw Error(Errc::contract_violation, "witness traceback lost at a join node");
        break;
      }
    }
  }
  for (int c : colors)
    if (c == 0) throw Error(Errc::contract_violation, "witness traceback left a vertex uncolored");
  return colors;
}

}  // namespace

DcRun dc_run(const Graph& g, const NiceTreeDecomposition& ntd, int chi, int delta, const DcOptions& opts) {
  require_params(chi, delta);
  if (g.has_any_loop()) throw Error(Errc::invalid_argument, "dc_run: graph has self-loops");
  if (ntd.nodes.empty()) throw Error(Errc::invalid_argument, "dc_run: empty decomposition");

  std::vector<DcTable> tables(ntd.nodes.size());
  DcRun run;
  for (std::size_t i = 0; i < ntd.nodes.size(); ++i) {
    const NiceNode& nd = ntd.nodes[i];
    switch (nd.kind) {
      case NodeKind::Leaf:
        tables[i] = dc_leaf(nd.vertex, chi, delta);
        break;
      case NodeKind::Introduce:
        tables[i] = dc_introduce(g, tables[nd.child1], nd.vertex);
        break;
      case NodeKind::Forget:
        tables[i] = dc_forget(g, tables[nd.child1], nd.vertex);
        break;
      case NodeKind::Join:
        tables[i] = opts.join == JoinBackend::naive
                        ? dc_join_naive(g, tables[nd.child1], tables[nd.child2])
                        : dc_join_fast(g, tables[nd.child1], tables[nd.child2], opts.join);
        break;
    }
    if (opts.decision_only) {
      saturate(tables[i]);
      prune_dominated(tables[i]);
    }
    run.peak_table_entries = std::max(run.peak_table_entries, tables[i].entries.size());
    if (!opts.want_witness) {
      if (nd.child1 >= 0) tables[nd.child1] = DcTable{};
      if (nd.child2 >= 0) tables[nd.child2] = DcTable{};
    }
  }
  const DcTable& root = tables[ntd.root()];
  auto it = root.entries.find(DcKey{});
  run.count = it == root.entries.end() ? Bigint(0) : it->second;
  if (opts.want_witness && run.count > 0) run.witness = traceback(g, ntd, tables);
  return run;
}

Bigint dc_count(const Graph& g, const NiceTreeDecomposition& ntd, int chi, int delta, JoinBackend join) {
  DcOptions opts;
  opts.join = join;
  return dc_run(g, ntd, chi, delta, opts).count;
}

bool dc_decide(const Graph& g, const NiceTreeDecomposition& ntd, int chi, int delta, Coloring* witness) {
  DcOptions opts;
  opts.decision_only = true;
  opts.want_witness = witness != nullptr;
  DcRun run = dc_run(g, ntd, chi, delta, opts);
  if (witness && run.witness) *witness = *run.witness;
  return run.count > 0;
}

}  // namespace degbound
