#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "udenom/cyclo.hpp"
#include "udenom/rational.hpp"
#include "udenom/sparse_poly.hpp"

namespace udenom {

// Root of unity e^{2*pi*i*num/den} as a reduced fraction in Q/Z:
// den >= 1, 0 <= num < den, gcd(num, den) = 1.
struct RootFraction {
  long long num = 0;
  long long den = 1;

  static RootFraction reduced(long long num, long long den);
  friend auto operator<=>(const RootFraction&, const RootFraction&) = default;
};

// Eigenvalue multiset of one group element: fraction -> multiplicity (> 0).
using RootMultiset = std::map<RootFraction, long long>;

// Cycle type of a permutation: parts sorted descending.
struct CycleType {
  std::vector<long long> parts;

  long long degree() const;     // sum of parts (= number of points)
  int parity() const;           // +1 even, -1 odd
  bool operator==(const CycleType& rhs) const = default;
  auto operator<=>(const CycleType& rhs) const = default;
  std::string to_string() const;  // "(3,1,1)"
};

// Eigenvalues of the permutation matrix of a cycle type: each part k
// contributes all k-th roots of unity once.
RootMultiset eigen_from_cycle_type(const CycleType& type);

// Validated conversion multiset -> prod phi_d^{m_d}: for each order d the
// multiplicity must be identical across all primitive fractions b/d
// (Galois stability); the common value is the exponent of phi_d.
// Throws GaloisUnstableError otherwise.
CycloFactored eigen_to_factored(const RootMultiset& eigen);

// det(id - t*g) for an element with the given (Galois-stable) eigenvalue
// multiset, expanded: prod over orders d of phi_d^{multiplicity at 1/d}.
SparsePoly char_det_factored(const RootMultiset& eigen);

// --- Group descriptions ------------------------------------------------

struct ElementsSpec {
  std::vector<RootMultiset> elements;  // must contain the identity multiset
};

struct PermSpec {
  long long n = 0;                                // number of points
  std::vector<std::vector<long long>> generators; // one-line images, 1-based
};

enum class Family { Symmetric, Alternating };

struct FamilySpec {
  Family family = Family::Symmetric;
  long long n = 0;
};

using GroupSpec = std::variant<ElementsSpec, PermSpec, FamilySpec>;

inline constexpr long long kDefaultElementBound = 1'000'000;

// Closure of the generated permutation group, aggregated by cycle type with
// element counts.  Throws BoundError when the closure exceeds the bound.
std::vector<std::pair<CycleType, Int>> perm_group_closure(const PermSpec& spec,
                                                          long long bound = kDefaultElementBound);

// Cycle types with element counts for the symmetric/alternating family
// (partition enumeration; alternating keeps even partitions — split classes
// share a cycle type, so counts aggregate to the plain S_n class size
// n!/prod(k^{m_k} m_k!)).  Pre: n >= 1 (>= 3 for alternating).
std::vector<std::pair<CycleType, Int>> conjugacy_classes(const FamilySpec& spec);

// One summand of a class-based Molien sum.
struct ConjClassEigen {
  RootMultiset eigen;
  Int size = 0;
};

// Unified class list for any group description (elements become singleton
// classes).  Validates presence of the identity and consistent dimension.
std::vector<ConjClassEigen> group_classes(const GroupSpec& spec,
                                          long long bound = kDefaultElementBound);

Int group_order(const std::vector<ConjClassEigen>& classes);

// Universal denominator of the invariant ring: lcm over group elements of
// det(id - t*g), i.e. pointwise max of eigenvalue multiplicities, validated
// for Galois stability and returned factored.
CycloFactored udenom_finite(const GroupSpec& spec, long long bound = kDefaultElementBound);
CycloFactored udenom_finite_classes(const std::vector<ConjClassEigen>& classes);

// Exact Molien sum H(t) = (1/|G|) sum_g 1/det(id - t*g), fully reduced.
RationalFn molien_series(const GroupSpec& spec, long long bound = kDefaultElementBound);
RationalFn molien_series_classes(const std::vector<ConjClassEigen>& classes);

// --- Closed forms for the symmetric and alternating families -----------

// udenom(S^{Sym_n}) = prod_{k=1}^{n} (1 - t^k) = prod_d phi_d^{floor(n/d)}.
CycloFactored sym_udenom_closed(long long n);  // pre: n >= 1

// udenom(S^{Alt_n}): phi_d-exponent floor(n/d) when d is odd, floor(n/d) is
// even, or d*floor(n/d) <= n-2; floor(n/d) - 1 otherwise.  Pre: n >= 3.
CycloFactored alt_udenom_closed(long long n);

// Denominator of H(S^{Alt_n}): exponent max(0, floor(n/d) - 1) when
// n(n-1)/d is an odd integer, floor(n/d) otherwise.  Pre: n >= 3.
CycloFactored alt_denom_closed(long long n);

// H(S^{Alt_n}) = (1 + t^{n(n-1)/2}) / prod_{k<=n} (1 - t^k), reduced.
RationalFn alt_hilbert_closed(long long n);  // pre: n >= 3

}  // namespace udenom
