#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "udenom/degree.hpp"
#include "udenom/sparse_poly.hpp"

namespace udenom {

// Canonical key of a generalized cyclotomic factor phi_d with d = order * p,
// p primitive.  phi_d(t) = phi_order(t^p) where phi_k is the univariate
// cyclotomic polynomial normalized so phi_k(0) = 1 (phi_1 = 1 - t; phi_k for
// k >= 2 is the standard cyclotomic polynomial).
struct CycloKey {
  long long order;        // k >= 1
  DegreeVector direction; // primitive, nonzero, nonnegative entries

  // The degree vector d = order * direction this key stands for.
  DegreeVector degree() const { return vec_scale(direction, order); }

  friend auto operator<=>(const CycloKey&, const CycloKey&) = default;
};

// Builds the canonical key for phi_d (splits d into content * primitive).
CycloKey cyclo_key(const DegreeVector& d);

// Expanded phi_k(t^p) as a sparse polynomial in p.size() variables.
SparsePoly cyclo_expand(long long k, const DegreeVector& p);
// Univariate phi_k as dense coefficients (index = exponent).
std::vector<Int> cyclo_expand_dense(long long k);

// A finite product prod phi_d^{e_d} with positive exponents; the neutral
// value (empty map) represents 1.  This is the canonical factored form of
// universal denominators.
class CycloFactored {
 public:
  using FactorMap = std::map<CycloKey, long long>;

  CycloFactored() = default;

  static CycloFactored one() { return {}; }
  // phi_d^exp as a factored value (exp >= 0; exp = 0 gives 1).
  static CycloFactored power(const DegreeVector& d, long long exp);

  bool is_one() const { return factors_.empty(); }
  const FactorMap& factors() const { return factors_; }
  long long exponent_of(const CycloKey& key) const;
  long long exponent_of_degree(const DegreeVector& d) const;
  // Number of variables of the expanded polynomial (1 for the empty product).
  int arity() const;

  void multiply_by(const DegreeVector& d, long long exp);  // exp may be negative; result exponents must stay >= 0

  friend CycloFactored factored_mul(const CycloFactored& a, const CycloFactored& b);
  friend CycloFactored factored_lcm(const CycloFactored& a, const CycloFactored& b);
  friend CycloFactored factored_gcd(const CycloFactored& a, const CycloFactored& b);
  // Exponentwise a | b.
  friend bool factored_divides(const CycloFactored& a, const CycloFactored& b);
  // Exponent difference b / a; pre: a | b.
  friend CycloFactored factored_quotient(const CycloFactored& b, const CycloFactored& a);

  bool operator==(const CycloFactored& rhs) const = default;

  SparsePoly expand() const;

  // "phi_1^4 phi_2^2 phi_3", multivariate keys as "phi_(4,2)"; "1" if empty.
  std::string to_string() const;

 private:
  FactorMap factors_;
};

// Factorization of 1 - t^d: with d = k * p (p primitive), the product of
// phi_{j*p} over all divisors j of k.
CycloFactored factor_one_minus(const DegreeVector& d);

// Regrouping of a univariate factored value as prod_k (1 - t^k)^{c_k}
// (all c_k > 0), when one exists.  Pairs are sorted by k.
std::optional<std::vector<std::pair<long long, long long>>> one_minus_form(const CycloFactored& f);

// Regrouping as (1 + t)^a * prod_k (1 - t^k)^{c_k}; covers the classical
// displays for SL2 invariants of binary forms.  Returns nullopt when even
// this shape does not exist.
struct OneMinusPlusForm {
  long long plus_exp = 0;  // exponent of (1 + t)
  std::vector<std::pair<long long, long long>> one_minus;  // (k, c_k), c_k > 0
};
std::optional<OneMinusPlusForm> one_minus_plus_form(const CycloFactored& f);

// "(1-t)(1-t^2)^2(1-t^3)" / "(1+t)(1-t^2)..." pretty-printers.
std::string one_minus_form_to_string(const std::vector<std::pair<long long, long long>>& factors);
std::string one_minus_plus_form_to_string(const OneMinusPlusForm& form);

}  // namespace udenom
