#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "udenom/degree.hpp"

namespace udenom {

using Int = mpz_class;
using Rat = mpq_class;

// Graded lexicographic order on exponent vectors: total degree first, then
// lexicographic.  Used as the canonical term order everywhere.
struct GradedLex {
  bool operator()(const std::vector<long long>& a, const std::vector<long long>& b) const;
};

// Sparse Laurent polynomial in r variables with arbitrary-precision integer
// coefficients.  Terms are kept in a map under GradedLex; zero coefficients
// are never stored.  Values are immutable in spirit: all operations return
// new polynomials.
class SparsePoly {
 public:
  using TermMap = std::map<std::vector<long long>, Int, GradedLex>;

  explicit SparsePoly(int arity) : arity_(arity) {}

  static SparsePoly zero(int arity) { return SparsePoly(arity); }
  static SparsePoly constant(int arity, Int c);
  static SparsePoly one(int arity) { return constant(arity, 1); }
  static SparsePoly monomial(Int coeff, const std::vector<long long>& exps);
  // Univariate polynomial from dense coefficients (index = exponent).
  static SparsePoly from_dense(const std::vector<Int>& coeffs);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Adds coeff * t^exps, dropping the term if the sum cancels.
  void add_term(const std::vector<long long>& exps, const Int& coeff);

  Int coefficient(const std::vector<long long>& exps) const;
  long long total_degree() const;  // max term degree; -1 for the zero poly
  bool has_negative_exponent() const;

  SparsePoly operator-() const;
  SparsePoly operator+(const SparsePoly& rhs) const;
  SparsePoly operator-(const SparsePoly& rhs) const;
  SparsePoly operator*(const SparsePoly& rhs) const;
  bool operator==(const SparsePoly& rhs) const = default;

  // Substitutes t -> t^p into a univariate polynomial, producing a poly in
  // p.size() variables whose term exponents are m * p.
  SparsePoly substitute_monomial(const DegreeVector& p) const;

  // Dense coefficient vector of a univariate polynomial with no negative
  // exponents (index = exponent).
  std::vector<Int> to_dense() const;

  // "1 - t + t^2", "1 + t1^2 t2"; terms in ascending graded-lex order.
  std::string to_string() const;

 private:
  int arity_;
  TermMap terms_;
};

// Exact division of univariate polynomials over Z.  Returns the quotient when
// a = q * b exactly, std::nullopt otherwise.  Intended for divisors whose
// leading coefficient is a unit (every cyclotomic expansion qualifies); for
// other divisors a failed trial division also means "not divisible over Z".
std::optional<SparsePoly> try_divide_exact(const SparsePoly& a, const SparsePoly& b);

}  // namespace udenom
