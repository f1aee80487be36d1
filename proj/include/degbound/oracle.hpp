#pragma once

#include <optional>
#include <vector>

#include "degbound/bigint.hpp"
#include "degbound/graph.hpp"

namespace degbound {

// Minimum-size vertex set whose deletion leaves max degree <= delta, found by
// exhaustive search in subset-size order (first hit is returned, so the
// result is deterministic).  Loop-free graphs only; intended for n <= ~16.
VertexSet bdvd_min_bruteforce(const Graph& g, int delta);

// Number of colorings with chi colors where every vertex has at most delta
// same-colored neighbors, by full chi^n enumeration.  Loop-free graphs only.
Bigint dc_count_bruteforce(const Graph& g, int chi, int delta);

// Lexicographically first such coloring, or nullopt.
std::optional<Coloring> dc_decide_bruteforce(const Graph& g, int chi, int delta);

// A family of subsets of {1..universe} is d-detecting when any two functions
// f,g : U -> {0..d-1} with equal sums on every member set are equal.  Checked
// by enumerating all nonzero difference vectors in {-(d-1)..d-1}^U; when the
// family fails, the witnessing difference vector is reported.
bool verify_detecting_family(int universe, int d, const std::vector<std::vector<int>>& family,
                             std::vector<int>* counterexample = nullptr);

}  // namespace degbound
