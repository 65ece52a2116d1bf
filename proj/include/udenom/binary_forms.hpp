#pragma once

#include "udenom/cyclo.hpp"
#include "udenom/torus.hpp"

namespace udenom {

// Universal denominator prod phi_d^{u_d} of the SL2 invariants of binary
// forms of degree n, derived from the maximal-torus exponents m_d for the
// weights -n, -n+2, ..., n:
//   u_1 = n - 2;
//   u_2 = n - 2 for n odd (the torus maximizer for d = 2 is the full weight
//         set, i.e. h = -id, where the group-orbit count drops by the full
//         generic SL2 orbit dimension), u_2 = m_2 for n even;
//   u_d = m_d for d >= 3.
// u_1/u_2 are never recomputed from torus data beyond that.  Pre: n >= 3.
CycloFactored sl2_udenom_via_torus(long long n);

// The classical three-case closed form:
//   n odd:          (1-t^4)(1-t^6) ... (1-t^{2n-2})
//   n = 2 mod 4:    (1+t)(1-t^2)(1-t^3) ... (1-t^{n-1})
//   n = 0 mod 4:    (1+t)(1-t^2)...(1-t^{n-3}) (1-t^{n/2-1}) (1-t^{n-1})
// Ranges are empty products when degenerate (n = 4 gives
// (1+t)(1-t)(1-t^3), matching the torus pipeline and the classical
// binary-quartic series 1/((1-t^2)(1-t^3))); the duplicated factor in the
// n = 0 mod 4 case is a literal product (exponents add).  Pre: n >= 3.
CycloFactored dixmier_closed(long long n);

// Torus universal denominator for the binary-form weights (rank-1 path).
CycloFactored binary_forms_torus_udenom(long long n);

struct BinaryFormsReport {
  CycloFactored via_torus;   // sl2_udenom_via_torus(n)
  CycloFactored closed;      // dixmier_closed(n)
  CycloFactored torus_full;  // binary_forms_torus_udenom(n)
  bool methods_equal = false;
  bool divides_torus = false;  // via_torus | torus_full exponentwise
};

BinaryFormsReport binary_forms_report(long long n);  // pre: n >= 3

}  // namespace udenom
