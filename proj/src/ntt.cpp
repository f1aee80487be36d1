#include "degbound/ntt.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "degbound/util.hpp"

namespace degbound::ntt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // this witness set is a proven deterministic test for every 64-bit integer
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

std::uint64_t find_primitive_root(std::uint64_t p) {
  auto fs = prime_factors(p - 1);
  for (std::uint64_t g = 2;; ++g) {
    bool ok = true;
    for (std::uint64_t f : fs)
      if (powmod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
}

std::mutex cache_mu;
std::map<std::pair<int, int>, std::vector<Prime>> cache;

std::mutex twiddle_mu;
std::map<std::tuple<std::uint64_t, std::size_t, bool>, std::shared_ptr<const std::vector<std::uint64_t>>>
    twiddle_cache;

// Powers of the n-th root of unity (or its inverse): entry i is w_n^i for
// i < n/2.  Stage `len` of the transform reads them with stride n/len, so one
// table serves every stage.
std::shared_ptr<const std::vector<std::uint64_t>> twiddles(const Prime& pr, std::size_t n, bool inverse) {
  std::lock_guard<std::mutex> lock(twiddle_mu);
  auto key = std::make_tuple(pr.p, n, inverse);
  auto it = twiddle_cache.find(key);
  if (it != twiddle_cache.end()) return it->second;
  std::uint64_t w = powmod(pr.primitive_root, (pr.p - 1) / n, pr.p);
  if (inverse) w = invmod(w, pr.p);
  auto table = std::make_shared<std::vector<std::uint64_t>>(n / 2);
  if (!table->empty()) {
    (*table)[0] = 1;
    for (std::size_t i = 1; i < table->size(); ++i) (*table)[i] = mulmod((*table)[i - 1], w, pr.p);
  }
  twiddle_cache[key] = table;
  return table;
}

}  // namespace

std::vector<Prime> find_primes(int count, int two_adicity) {
  if (count < 1 || two_adicity < 1 || two_adicity > 40)
    throw Error(Errc::invalid_argument, "find_primes: bad parameters");
  std::lock_guard<std::mutex> lock(cache_mu);
  auto it = cache.find({count, two_adicity});
  if (it != cache.end()) return it->second;
  std::vector<Prime> out;
  std::uint64_t step = 1ull << two_adicity;
  for (std::uint64_t c = ((1ull << 62) - 1) >> two_adicity; c >= 1 && static_cast<int>(out.size()) < count; --c) {
    std::uint64_t p = c * step + 1;
    if (!is_prime(p)) continue;
    out.push_back(Prime{p, find_primitive_root(p), two_adicity});
  }
  if (static_cast<int>(out.size()) < count)
    throw Error(Errc::invalid_argument, "find_primes: search space exhausted");
  cache[{count, two_adicity}] = out;
  return out;
}

void transform(std::vector<std::uint64_t>& a, const Prime& pr, bool inverse) {
  std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw Error(Errc::invalid_argument, "transform: size must be a power of two");
  int lg = 0;
  while ((std::size_t(1) << lg) < n) ++lg;
  if (lg > pr.two_adicity) throw Error(Errc::invalid_argument, "transform: size exceeds prime two-adicity");
  const std::uint64_t p = pr.p;

  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  if (n >= 2) {
    auto tw = twiddles(pr, n, inverse);
    const std::uint64_t* roots = tw->data();
    for (std::size_t len = 2; len <= n; len <<= 1) {
      std::size_t stride = n / len;
      for (std::size_t i = 0; i < n; i += len) {
        for (std::size_t j = 0; j < len / 2; ++j) {
          std::uint64_t u = a[i + j];
          std::uint64_t v = mulmod(a[i + j + len / 2], roots[j * stride], p);
          a[i + j] = u + v < p ? u + v : u + v - p;
          a[i + j + len / 2] = u >= v ? u - v : u + p - v;
        }
      }
    }
  }
  if (inverse) {
    std::uint64_t ninv = invmod(n % p, p);
    for (auto& x : a) x = mulmod(x, ninv, p);
  }
}

Bigint crt(const std::vector<std::uint64_t>& residues, const std::vector<Prime>& primes) {
  if (residues.size() != primes.size()) throw Error(Errc::invalid_argument, "crt: size mismatch");
  std::size_t k = primes.size();
  std::vector<std::uint64_t> digits(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t pi = primes[i].p;
    // evaluate the mixed-radix prefix at p_i
    std::uint64_t val = 0, mult = 1;
    for (std::size_t j = 0; j < i; ++j) {
      val = (val + mulmod(digits[j], mult, pi)) % pi;
      mult = mulmod(mult, primes[j].p % pi, pi);
    }
    std::uint64_t r = residues[i] % pi;
    std::uint64_t diff = r >= val ? r - val : r + pi - val;
    digits[i] = mulmod(diff, invmod(mult, pi), pi);
  }
  Bigint out = 0, mul = 1;
  for (std::size_t i = 0; i < k; ++i) {
    out += mul * Bigint(digits[i]);
    mul *= Bigint(primes[i].p);
  }
  return out;
}

}  // namespace degbound::ntt
