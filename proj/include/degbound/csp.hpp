#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degbound/util.hpp"

namespace degbound {

// One constraint of a fixed-arity CSP: an ordered scope of q distinct
// variables plus the list of satisfying assignments (tuples over the domain,
// aligned with the scope order).
struct CspConstraint {
  std::vector<int> scope;
  std::vector<std::vector<int>> sat;
};

// A CSP with n variables over the canonical domain [1,B] where every
// constraint has the same arity q.  Satisfying-assignment lists are kept
// lexicographically sorted, are non-empty, duplicate-free and of size <= B^q;
// all of this is validated on construction.
class CspInstance {
 public:
  CspInstance(int num_vars, int arity, int domain, std::vector<CspConstraint> constraints);

  int num_vars() const { return n_; }
  int arity() const { return q_; }
  int domain_size() const { return b_; }
  const std::vector<CspConstraint>& constraints() const { return constraints_; }

  // assignment[i-1] is the value of variable i.
  bool satisfied_by(const std::vector<int>& assignment) const;

 private:
  int n_, q_, b_;
  std::vector<CspConstraint> constraints_;
};

// Lexicographically first satisfying assignment, or nullopt if none exists.
// Intended for desk-scale instances (B^n enumeration).
std::optional<std::vector<int>> csp_bruteforce(const CspInstance& csp);

// Text format:
//   csp <n> <m> <q> <B>
//   scope <v_1> ... <v_q>        (m times, each followed by its sat lines)
//   sat <y_1> ... <y_q>
// Comment lines start with 'c'.  Emission is canonical: sat tuples sorted.
CspInstance parse_csp(const std::string& text);
std::string emit_csp(const CspInstance& csp);

// Random instance, deterministic per seed: each constraint draws a uniform
// scope of q distinct variables and includes each of the B^q tuples with the
// given probability, resampling the tuple set while it comes out empty.
// Throws invalid_argument if q > n or density is outside [0,1].
CspInstance random_csp(int num_vars, int num_constraints, int arity, int domain, double density,
                       std::uint64_t seed);

// All B^q tuples over [1,B] in lexicographic order; shared by the brute-force
// search, the random generator, and the hardness constructions.
std::vector<std::vector<int>> all_tuples(int arity, int domain);

}  // namespace degbound
