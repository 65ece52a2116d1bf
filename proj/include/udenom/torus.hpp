#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "udenom/cyclo.hpp"
#include "udenom/sparse_poly.hpp"

namespace udenom {

// Diagonal torus action data: n coordinates with weights in Z^l, and a
// multigrading of the coordinate ring by degrees in N^r \ {0}.  The plain
// N-grading is r = 1 with every degree (1).
struct WeightSystem {
  int l = 1;  // torus rank
  int r = 1;  // grading rank
  std::vector<std::vector<long long>> weights;  // n rows in Z^l
  std::vector<DegreeVector> degrees;            // n rows in N^r, each nonzero

  std::size_t size() const { return weights.size(); }
  void validate() const;  // throws ConsistencyError on shape problems
};

// Whether 0 lies in the interior (inside the linear span of the points) of
// the polytope spanned by the given points.  Equivalent to feasibility of
// sum lambda_i p_i = 0 with rational lambda_i >= 1, decided by exact
// rational-arithmetic LP (phase-1 simplex, Bland's rule) after an exact
// sign-scan presolve.  Pre: points nonempty, common dimension.
//
// Equivalence: the relative interior of conv{p_i} is exactly the set of
// strict convex combinations sum lambda_i p_i with lambda_i > 0,
// sum lambda_i = 1.  If 0 is such a combination, its affine hull contains 0,
// hence is a linear subspace containing every p_i, hence equals their span,
// so relative interior = interior within the span.  Scaling clears the
// normalization: positive rational lambda exist iff lambda_i >= 1 do.
bool interior_contains_zero(const std::vector<std::vector<long long>>& points);

inline constexpr int kDefaultSubsetBound = 22;

// Echelon (Hermite-form) basis of the kernel lattice
//   L_I = { v in Z^r : (0, v) in M_I },  M_I = Z-span of rows (w_i, deg_i),
// for the index subset I.  Deterministic: pivots positive, entries above a
// pivot reduced into [0, pivot).
std::vector<std::vector<Int>> kernel_lattice(const WeightSystem& ws,
                                             const std::vector<int>& subset);

// Universal denominator prod phi_d^{m_d} of the torus invariant ring by
// subset enumeration:
//   m_d = max { #I - rank(weights_I) : 0 in interior(C_I),  L_I <= Z*d }.
// Qualifying subsets always have kernel rank >= 1 (a positive integer
// relation makes (0, sum a_i deg_i) a nonzero kernel vector); rank >= 2
// kernels fit in no Z*d and are discarded; a rank-1 kernel generated by c*p
// (p primitive) credits exactly the degrees d = j*p with j | c.
// Throws BoundError when n exceeds subset_bound.
CycloFactored torus_udenom_general(const WeightSystem& ws,
                                   int subset_bound = kDefaultSubsetBound);

// Evidence for the rank-1 fast path: per order d >= 2 the qualifying residue
// classes (lambda + modulus*Z intersected with the weights, containing at
// least one positive and one negative weight) as (lambda, modulus, count).
struct Rank1Evidence {
  long long m1 = 0;
  bool mixed_signs = false;
  long long zero_count = 0;
  // d -> qualifying classes sorted by (modulus, lambda); only d with at
  // least one qualifying class appear.
  std::map<long long, std::vector<std::tuple<long long, long long, long long>>> classes;
  std::map<long long, long long> m;  // d >= 2 with m_d > 0
};

// Fast path for l = 1, r = 1, all degrees 1:
//   m_1 = #zero weights when all weights have one sign, n - 1 otherwise;
//   for d >= 2: m_d = max over classes a*b + a*d*Z (a >= 1, 1 <= b <= d-1,
//   gcd(b, d) = 1, a*d <= max w - min w) containing >= 1 positive and >= 1
//   negative weight of (#{i : w_i in the class} - 1); 0 when none qualifies.
// Duplicates among weights count by index.  Pre: weights nonempty.
CycloFactored torus_udenom_rank1(const std::vector<long long>& weights,
                                 Rank1Evidence* evidence = nullptr);

// Closed form for the weights -n, -n+2, ..., n (n >= 3):
//   n odd:          (1-t^2)^2 (1-t^4) ... (1-t^{2n-2})
//   n = 2 mod 4:    (1-t^2) * prod_{k=1}^{n-1} (1-t^k)
//   n = 0 mod 4:    (1-t)(1-t^2)^2 (1-t^3)...(1-t^{n-3}) (1-t^{n/2-1}) (1-t^{n-1})
// The display's n = 4 corner is inconsistent under every reading; that value
// is pinned to the enumerated result (1-t)^2 (1-t^2)(1-t^3).
CycloFactored binary_torus_udenom_closed(long long n);

}  // namespace udenom
