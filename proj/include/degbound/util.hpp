#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace degbound {

// Error codes used across the library.  Every thrown error carries one so
// callers (and the C API) can distinguish failure modes without string
// matching.
enum class Errc {
  malformed_header,
  vertex_out_of_range,
  duplicate_edge,
  bad_line,
  invalid_argument,
  invalid_decomposition,
  invalid_forest,
  invalid_csp,
  invalid_formula,
  contract_violation,
  io_error,
  not_implemented,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

const char* errc_name(Errc c);

// Deterministic RNG wrapper.  mt19937_64 has a standardized sequence, and we
// avoid std distributions (whose output is implementation-defined), so the
// same seed yields the same artifacts on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, bound), bound >= 1.  Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw Error(Errc::invalid_argument, "Rng::below: bound must be positive");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Bernoulli with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 eng_;
};

// Thread count resolution: explicit argument wins, then DEGBOUND_THREADS,
// then hardware concurrency.
int resolve_threads(int requested = 0);

// Runs fn(i) for i in [0, count).  Falls back to a plain loop when only one
// thread is available or the range is tiny.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn, int threads = 0);

// --- small string helpers used by the parsers -------------------------------

std::vector<std::string> split_ws(const std::string& line);
std::string trim(const std::string& s);

// Reads a whole file; throws Errc::io_error on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace degbound
