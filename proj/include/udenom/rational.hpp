#pragma once

#include <string>
#include <utility>
#include <vector>

#include "udenom/cyclo.hpp"
#include "udenom/sparse_poly.hpp"

namespace udenom {

// Reduced rational function A(t) / prod phi_d^{e_d} in one variable.  The
// denominator is kept factored (so its constant term is 1 by construction)
// and no phi factor of the denominator divides the numerator.
struct RationalFn {
  SparsePoly numerator = SparsePoly::one(1);
  CycloFactored denominator;

  bool operator==(const RationalFn& rhs) const = default;
  std::string to_string() const;  // "(1 - t + t^2) / phi_1^3 phi_3"
};

// Cancels every cyclotomic factor of the denominator that exactly divides the
// numerator (division over Z; cyclotomic expansions have unit leading
// coefficients, so Z- and Q-divisibility agree).  Pre: univariate, numerator
// without negative exponents.
RationalFn reduce_rational(const SparsePoly& numerator, const CycloFactored& denominator);

// Exact sum of constant/denominator terms: sum_i c_i / expand(B_i) over a
// common factored denominator lcm(B_i), fully reduced.  Coefficients are
// exact rationals transiently; the reduced numerator must come out integral
// (always true for Molien sums), otherwise ConsistencyError.
RationalFn rational_sum(const std::vector<std::pair<Rat, CycloFactored>>& terms);

// First order+1 Taylor coefficients of f at t = 0.  Integral because the
// denominator has constant term 1.  Pre: univariate numerator, no negative
// exponents, order >= 0.
std::vector<Int> series_expand(const RationalFn& f, long long order);

}  // namespace udenom
