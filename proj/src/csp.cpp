#include "degbound/csp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace degbound {

namespace {

// B^q as a size_t with overflow care; q and B are tiny in practice.
std::size_t pow_st(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (std::size_t(1) << 40)) throw Error(Errc::invalid_argument, "domain^arity too large");
    r *= static_cast<std::size_t>(base);
  }
  return r;
}

}  // namespace

CspInstance::CspInstance(int num_vars, int arity, int domain, std::vector<CspConstraint> constraints)
    : n_(num_vars), q_(arity), b_(domain), constraints_(std::move(constraints)) {
  if (n_ < 1 || q_ < 1 || b_ < 1) throw Error(Errc::invalid_csp, "csp needs n, q, B >= 1");
  if (q_ > n_) throw Error(Errc::invalid_csp, "arity exceeds variable count");
  std::size_t max_sat = pow_st(b_, q_);
  for (auto& c : constraints_) {
    if (static_cast<int>(c.scope.size()) != q_)
      throw Error(Errc::invalid_csp, "constraint scope size differs from arity");
    std::vector<int> sorted = c.scope;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(Errc::invalid_csp, "constraint scope repeats a variable");
    for (int v : c.scope)
      if (v < 1 || v > n_) throw Error(Errc::invalid_csp, "scope variable out of range");
    if (c.sat.empty()) throw Error(Errc::invalid_csp, "constraint with empty satisfying-assignment list");
    if (c.sat.size() > max_sat)
      throw Error(Errc::invalid_csp, "constraint lists more satisfying assignments than tuples exist");
    for (const auto& t : c.sat) {
      if (static_cast<int>(t.size()) != q_)
        throw Error(Errc::invalid_csp, "satisfying assignment length differs from arity");
      for (int y : t)
        if (y < 1 || y > b_) throw Error(Errc::invalid_csp, "satisfying assignment value out of domain");
    }
    std::sort(c.sat.begin(), c.sat.end());
    if (std::adjacent_find(c.sat.begin(), c.sat.end()) != c.sat.end())
      throw Error(Errc::invalid_csp, "constraint repeats a satisfying assignment");
  }
}

bool CspInstance::satisfied_by(const std::vector<int>& assignment) const {
  if (static_cast<int>(assignment.size()) != n_)
    throw Error(Errc::invalid_argument, "assignment length differs from variable count");
  std::vector<int> restriction(q_);
  for (const auto& c : constraints_) {
    for (int i = 0; i < q_; ++i) restriction[i] = assignment[c.scope[i] - 1];
    if (!std::binary_search(c.sat.begin(), c.sat.end(), restriction)) return false;
  }
  return true;
}

std::optional<std::vector<int>> csp_bruteforce(const CspInstance& csp) {
  std::vector<int> a(csp.num_vars(), 1);
  for (;;) {
    if (csp.satisfied_by(a)) return a;
    // advance odometer, last variable fastest => lexicographic order
    int i = csp.num_vars() - 1;
    while (i >= 0 && a[i] == csp.domain_size()) a[i--] = 1;
    if (i < 0) return std::nullopt;
    ++a[i];
  }
}

CspInstance parse_csp(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  int n = 0, m = 0, q = 0, b = 0;
  std::vector<CspConstraint> constraints;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    // a comment is the standalone token "c" (the header keyword also starts with the letter)
    if (t.empty() || t == "c" || t.rfind("c ", 0) == 0) continue;
    auto tok = split_ws(t);
    auto parse_ints = [&](std::size_t from) {
      std::vector<int> vals;
      for (std::size_t i = from; i < tok.size(); ++i) {
        try {
          vals.push_back(std::stoi(tok[i]));
        } catch (const std::exception&) {
          throw Error(Errc::bad_line, "line " + std::to_string(lineno) + ": non-numeric field");
        }
      }
      return vals;
    };
    if (!have_header) {
      if (tok.size() != 5 || tok[0] != "csp")
        throw Error(Errc::malformed_header, "line " + std::to_string(lineno) + ": expected 'csp <n> <m> <q> <B>'");
      auto vals = parse_ints(1);
      n = vals[0];
      m = vals[1];
      q = vals[2];
      b = vals[3];
      have_header = true;
      continue;
    }
    if (tok[0] == "scope") {
      CspConstraint c;
      c.scope = parse_ints(1);
      constraints.push_back(std::move(c));
    } else if (tok[0] == "sat") {
      if (constraints.empty())
        throw Error(Errc::bad_line, "line " + std::to_string(lineno) + ": 'sat' before any 'scope'");
      constraints.back().sat.push_back(parse_ints(1));
    } else {
      throw Error(Errc::bad_line, "line " + std::to_string(lineno) + ": expected 'scope' or 'sat' line");
    }
  }
  if (!have_header) throw Error(Errc::malformed_header, "missing 'csp' header");
  if (static_cast<int>(constraints.size()) != m)
    throw Error(Errc::malformed_header, "header announces " + std::to_string(m) + " constraints but " +
                                            std::to_string(constraints.size()) + " found");
  return CspInstance(n, q, b, std::move(constraints));
}

std::string emit_csp(const CspInstance& csp) {
  std::ostringstream out;
  out << "csp " << csp.num_vars() << ' ' << csp.constraints().size() << ' ' << csp.arity() << ' '
      << csp.domain_size() << '\n';
  for (const auto& c : csp.constraints()) {
    out << "scope";
    for (int v : c.scope) out << ' ' << v;
    out << '\n';
    for (const auto& t : c.sat) {
      out << "sat";
      for (int y : t) out << ' ' << y;
      out << '\n';
    }
  }
  return out.str();
}

std::vector<std::vector<int>> all_tuples(int arity, int domain) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(arity, 1);
  for (;;) {
    out.push_back(t);
    int i = arity - 1;
    while (i >= 0 && t[i] == domain) t[i--] = 1;
    if (i < 0) return out;
    ++t[i];
  }
}

CspInstance random_csp(int num_vars, int num_constraints, int arity, int domain, double density,
                       std::uint64_t seed) {
  if (arity > num_vars) throw Error(Errc::invalid_argument, "random_csp: arity exceeds variable count");
  if (num_constraints < 0) throw Error(Errc::invalid_argument, "random_csp: negative constraint count");
  if (!(density >= 0.0 && density <= 1.0))
    throw Error(Errc::invalid_argument, "random_csp: density outside [0,1]");
  Rng rng(seed);
  auto tuples = all_tuples(arity, domain);
  std::vector<CspConstraint> constraints;
  constraints.reserve(num_constraints);
  for (int ci = 0; ci < num_constraints; ++ci) {
    CspConstraint c;
    // scope: q distinct variables by partial Fisher-Yates over [1,n]
    std::vector<int> pool(num_vars);
    for (int i = 0; i < num_vars; ++i) pool[i] = i + 1;
    for (int i = 0; i < arity; ++i) {
      std::size_t j = i + rng.below(pool.size() - i);
      std::swap(pool[i], pool[j]);
      c.scope.push_back(pool[i]);
    }
    while (c.sat.empty()) {
      for (const auto& t : tuples)
        if (rng.uniform01() < density) c.sat.push_back(t);
    }
    constraints.push_back(std::move(c));
  }
  return CspInstance(num_vars, arity, domain, std::move(constraints));
}

}  // namespace degbound
