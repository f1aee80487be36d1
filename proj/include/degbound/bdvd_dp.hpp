#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "degbound/decomp.hpp"
#include "degbound/graph.hpp"

namespace degbound {

// Packed per-vertex state, aligned with the sorted bag: 0 = deleted,
// 1 + j = kept with j already-forgotten kept neighbors (j <= delta).
using BdvdKey = std::vector<std::uint8_t>;

struct BdvdKeyHash {
  std::size_t operator()(const BdvdKey& k) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint8_t b : k) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Table entry: minimal number of deletions among vertices introduced so far,
// plus the child keys it came from (the traceback pointers).
struct BdvdEntry {
  int cost = 0;
  BdvdKey child1, child2;
};

struct BdvdTable {
  VertexSet bag;  // sorted
  int delta = 0;
  std::unordered_map<BdvdKey, BdvdEntry, BdvdKeyHash> entries;
};

struct BdvdOptions {
  // Drop partial solutions costing more than this many deletions; turns the
  // solver into a decision procedure for "is k_min <= budget".
  std::optional<int> budget;
  bool want_witness = true;  // retain tables and trace back a deletion set
};

struct BdvdResult {
  // Minimum number of deletions so the rest has maximum degree <= delta.
  // Absent only when a budget was given and every solution exceeds it.
  std::optional<int> k_min;
  std::optional<VertexSet> witness;
  std::size_t peak_table_entries = 0;
};

// Exact minimum-deletion solve over a nice tree decomposition of a loop-free
// graph.  Per-vertex state space has size delta + 2.
BdvdResult bdvd_solve(const Graph& g, const NiceTreeDecomposition& ntd, int delta,
                      const BdvdOptions& opts = {});

int bdvd_min(const Graph& g, const NiceTreeDecomposition& ntd, int delta);
bool bdvd_decide(const Graph& g, const NiceTreeDecomposition& ntd, int delta, int budget,
                 VertexSet* witness = nullptr);

}  // namespace degbound
