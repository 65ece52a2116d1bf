#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace udenom {

// Exponent vector d of a monomial t^d = t_1^{d_1} ... t_r^{d_r}.  Degree
// vectors that index cyclotomic factors live in N^r \ {0}; the zero vector is
// reserved as the "no common multiple" result of vec_lcm.
using DegreeVector = std::vector<long long>;

bool vec_is_zero(const DegreeVector& d);

// Divisibility in the monoid (N^r, +): d | e  iff  e = k*d for some k in N.
// k = 0 (e the zero vector) counts as divisible.  Pre: d is nonzero.
bool vec_divides(const DegreeVector& d, const DegreeVector& e);

// Smallest nonzero common multiple of d and e under vec_divides, or the zero
// vector when none exists (non-parallel directions).  Pre: d, e nonzero.
DegreeVector vec_lcm(const DegreeVector& d, const DegreeVector& e);

// gcd of the entries (positive; pre: d nonzero).
long long vec_content(const DegreeVector& d);

// d / vec_content(d): the primitive direction of d.  Pre: d nonzero.
DegreeVector vec_primitive(const DegreeVector& d);

DegreeVector vec_scale(const DegreeVector& d, long long k);

std::string vec_to_string(const DegreeVector& d);  // "3" or "(4,2)"

}  // namespace udenom
