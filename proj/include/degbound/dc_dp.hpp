#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "degbound/bigint.hpp"
#include "degbound/decomp.hpp"
#include "degbound/graph.hpp"

namespace degbound {

// How join nodes are evaluated.
//  - naive: literal pair enumeration with componentwise deficiency checks;
//    the reference route.
//  - schoolbook: bucket polynomials multiplied term by term on big integers,
//    products accepted through the base-(delta+1) digit-sum test.
//  - ntt: the same bucket polynomials multiplied modulo several word-sized
//    primes with CRT reconstruction; transforms are cached per bucket and
//    accumulated in the frequency domain per digit-sum class.
//  - automatic: schoolbook for small cells, ntt for large ones.
enum class JoinBackend { naive, schoolbook, ntt, automatic };

// Packed per-vertex state: byte (color-1)*(delta+1) + deficiency, aligned
// with the sorted bag.  The deficiency of a vertex counts its already
// forgotten same-colored neighbors.
using DcKey = std::vector<std::uint8_t>;

struct DcKeyHash {
  std::size_t operator()(const DcKey& k) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint8_t b : k) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Sparse table of one decomposition node: only realizable state tuples are
// stored, so the size is bounded by (chi*(delta+1))^|bag| but is usually far
// smaller.
struct DcTable {
  VertexSet bag;  // sorted
  int chi = 0;
  int delta = 0;
  std::unordered_map<DcKey, Bigint, DcKeyHash> entries;

  std::uint8_t pack(int color, int deficiency) const {
    return static_cast<std::uint8_t>((color - 1) * (delta + 1) + deficiency);
  }
  int color_of(std::uint8_t state) const { return static_cast<int>(state) / (delta + 1) + 1; }
  int deficiency_of(std::uint8_t state) const { return static_cast<int>(state) % (delta + 1); }
};

// --- node operations (exposed so tests can probe them individually) ---------

DcTable dc_leaf(Vertex v, int chi, int delta);
DcTable dc_introduce(const Graph& g, const DcTable& child, Vertex v);
DcTable dc_forget(const Graph& g, const DcTable& child, Vertex v);
DcTable dc_join_naive(const Graph& g, const DcTable& a, const DcTable& b);
DcTable dc_join_fast(const Graph& g, const DcTable& a, const DcTable& b,
                     JoinBackend backend = JoinBackend::automatic);

// Identifier of a deficiency vector: sum of deficiency[j] * (delta+1)^j.
std::uint64_t dc_identifier(const std::vector<int>& deficiencies, int delta);
// Digit sum of an identifier over `positions` base-(delta+1) digits, or -1 if
// the value needs more digits (i.e. a join product overflowed its bag).
int dc_digit_sum(std::uint64_t identifier, int positions, int delta);

// --- full runs ---------------------------------------------------------------

struct DcOptions {
  JoinBackend join = JoinBackend::automatic;
  bool decision_only = false;  // boolean semiring: table values saturate at 1
  bool want_witness = false;   // retain tables and trace back one coloring
};

struct DcRun {
  Bigint count;                         // number of valid colorings (or 0/1 in decision mode)
  std::optional<Coloring> witness;      // present when requested and count > 0
  std::size_t peak_table_entries = 0;   // largest sparse table seen
};

// Counts (chi, delta)-defective colorings of a loop-free graph over a nice
// tree decomposition.  The decomposition must be valid for g.
DcRun dc_run(const Graph& g, const NiceTreeDecomposition& ntd, int chi, int delta,
             const DcOptions& opts = {});

Bigint dc_count(const Graph& g, const NiceTreeDecomposition& ntd, int chi, int delta,
                JoinBackend join = JoinBackend::automatic);
bool dc_decide(const Graph& g, const NiceTreeDecomposition& ntd, int chi, int delta,
               Coloring* witness = nullptr);

}  // namespace degbound
