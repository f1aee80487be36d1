#include "degbound/oracle.hpp"

#include <algorithm>

namespace degbound {

namespace {

void require_loop_free(const Graph& g, const char* what) {
  if (g.has_any_loop()) throw Error(Errc::invalid_argument, std::string(what) + ": graph has self-loops");
}

// Enumerates k-subsets of [1..n] in lexicographic order.
bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - (k - 1 - i)) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

VertexSet bdvd_min_bruteforce(const Graph& g, int delta) {
  require_loop_free(g, "bdvd_min_bruteforce");
  if (delta < 0) throw Error(Errc::invalid_argument, "bdvd_min_bruteforce: negative delta");
  int n = g.num_vertices();
  if (n > 24) throw Error(Errc::invalid_argument, "bdvd_min_bruteforce: graph too large for exhaustive search");
  for (int k = 0; k <= n; ++k) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i + 1;
    do {
      VertexSet s(comb.begin(), comb.end());
      if (verify_deletion_set(g, s, delta)) return s;
    } while (next_combination(comb, n));
    if (k == 0 && verify_deletion_set(g, {}, delta)) return {};
  }
  // unreachable: deleting all vertices always works
  throw Error(Errc::invalid_argument, "bdvd_min_bruteforce: no deletion set found");
}

namespace {

template <typename Visit>
void for_each_coloring(const Graph& g, int chi, int delta, Visit&& visit) {
  int n = g.num_vertices();
  Coloring c(n, 1);
  for (;;) {
    bool ok = true;
    for (Vertex v = 1; v <= n && ok; ++v) {
      int same = 0;
      for (Vertex u : g.neighbors(v))
        if (c[u - 1] == c[v - 1]) ++same;
      if (same > delta) ok = false;
    }
    if (ok && !visit(c)) return;
    int i = n - 1;
    while (i >= 0 && c[i] == chi) c[i--] = 1;
    if (i < 0) return;
    ++c[i];
  }
}

}  // namespace

Bigint dc_count_bruteforce(const Graph& g, int chi, int delta) {
  require_loop_free(g, "dc_count_bruteforce");
  if (chi < 1 || delta < 0) throw Error(Errc::invalid_argument, "dc_count_bruteforce: need chi >= 1, delta >= 0");
  if (g.num_vertices() > 20) throw Error(Errc::invalid_argument, "dc_count_bruteforce: graph too large");
  Bigint count = 0;
  for_each_coloring(g, chi, delta, [&](const Coloring&) {
    ++count;
    return true;
  });
  return count;
}

std::optional<Coloring> dc_decide_bruteforce(const Graph& g, int chi, int delta) {
  require_loop_free(g, "dc_decide_bruteforce");
  if (chi < 1 || delta < 0) throw Error(Errc::invalid_argument, "dc_decide_bruteforce: need chi >= 1, delta >= 0");
  if (g.num_vertices() > 24) throw Error(Errc::invalid_argument, "dc_decide_bruteforce: graph too large");
  std::optional<Coloring> found;
  for_each_coloring(g, chi, delta, [&](const Coloring& c) {
    found = c;
    return false;  // first hit is the lexicographically smallest
  });
  return found;
}

bool verify_detecting_family(int universe, int d, const std::vector<std::vector<int>>& family,
                             std::vector<int>* counterexample) {
  if (universe < 1 || d < 1) throw Error(Errc::invalid_argument, "verify_detecting_family: need universe, d >= 1");
  for (const auto& s : family)
    for (int u : s)
      if (u < 1 || u > universe)
        throw Error(Errc::invalid_argument, "verify_detecting_family: set element out of range");
  if (d == 1) return true;  // only one function exists
  std::vector<int> h(universe, -(d - 1));  // difference vector over -(d-1)..(d-1)
  for (;;) {
    bool nonzero = false;
    for (int x : h)
      if (x != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) {
      bool detected = false;
      for (const auto& s : family) {
        long long sum = 0;
        for (int u : s) sum += h[u - 1];
        if (sum != 0) {
          detected = true;
          break;
        }
      }
      if (!detected) {
        if (counterexample) *counterexample = h;
        return false;
      }
    }
    int i = universe - 1;
    while (i >= 0 && h[i] == d - 1) h[i--] = -(d - 1);
    if (i < 0) return true;
    ++h[i];
  }
}

}  // namespace degbound
