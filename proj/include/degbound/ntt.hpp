#pragma once

#include <cstdint>
#include <vector>

#include "degbound/bigint.hpp"

namespace degbound::ntt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);  // p prime

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// A word-sized prime p = c * 2^two_adicity + 1 together with a primitive root,
// suitable for number-theoretic transforms of length up to 2^two_adicity.
struct Prime {
  std::uint64_t p;
  std::uint64_t primitive_root;
  int two_adicity;
};

// The `count` largest such primes below 2^62, found by downward search.
// Deterministic; the search is cheap and done once per process (cached).
std::vector<Prime> find_primes(int count, int two_adicity);

// In-place transform; a.size() must be a power of two <= 2^two_adicity.
// All values must already be reduced mod pr.p.
void transform(std::vector<std::uint64_t>& a, const Prime& pr, bool inverse);

// Reconstructs the unique non-negative integer below the product of the
// primes from its residues (Garner's mixed-radix algorithm).
Bigint crt(const std::vector<std::uint64_t>& residues, const std::vector<Prime>& primes);

}  // namespace degbound::ntt
