#include "udenom/torus.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "udenom/errors.hpp"

namespace udenom {

void WeightSystem::validate() const {
  if (l < 1) throw ConsistencyError("weight system: torus rank must be >= 1");
  if (r < 1) throw ConsistencyError("weight system: grading rank must be >= 1");
  if (weights.empty()) throw ConsistencyError("weight system: no coordinates");
  if (degrees.size() != weights.size())
    throw ConsistencyError("weight system: weights/degrees length mismatch");
  for (const auto& w : weights)
    if (static_cast<int>(w.size()) != l)
      throw ConsistencyError("weight system: weight row of wrong length");
  for (const auto& d : degrees) {
    if (static_cast<int>(d.size()) != r)
      throw ConsistencyError("weight system: degree row of wrong length");
    bool nonzero = false;
    for (long long e : d) {
      if (e < 0) throw ConsistencyError("weight system: negative degree entry");
      nonzero |= e > 0;
    }
    if (!nonzero) throw ConsistencyError("weight system: zero degree row");
  }
}

// --- exact linear programming --------------------------------------------

namespace {

// Feasibility of A*mu = rhs, mu >= 0, by phase-1 simplex over exact
// rationals with Bland's rule (entering: smallest column index with negative
// reduced cost; leaving: smallest basic index among minimal ratios).
bool lp_feasible(std::vector<std::vector<Rat>> rows, std::vector<Rat> rhs) {
  const std::size_t m = rows.size();
  if (m == 0) return true;
  const std::size_t n = rows.front().size();
  const std::size_t total = n + m;

  for (std::size_t i = 0; i < m; ++i) {
    if (rhs[i] < 0) {
      for (auto& v : rows[i]) v = -v;
      rhs[i] = -rhs[i];
    }
    rows[i].resize(total, Rat(0));
    rows[i][n + i] = 1;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced costs for minimizing the sum of artificials: with the artificial
  // identity basis, cbar_j = c_j - sum_i rows[i][j].
  std::vector<Rat> obj(total, Rat(0));
  for (std::size_t j = 0; j < total; ++j) {
    if (j >= n) obj[j] = 1;
    for (std::size_t i = 0; i < m; ++i) obj[j] -= rows[i][j];
  }

  while (true) {
    std::size_t enter = total;
    for (std::size_t j = 0; j < total; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == total) break;  // optimal

    std::size_t leave = m;
    Rat best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (rows[i][enter] <= 0) continue;
      Rat ratio = rhs[i] / rows[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m)
      throw ConsistencyError(
          "feasibility simplex: unbounded phase-1 objective (unreachable)");

    Rat piv = rows[leave][enter];
    for (auto& v : rows[leave]) v /= piv;
    rhs[leave] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || rows[i][enter] == 0) continue;
      Rat f = rows[i][enter];
      for (std::size_t j = 0; j < total; ++j) rows[i][j] -= f * rows[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    if (obj[enter] != 0) {
      Rat f = obj[enter];
      for (std::size_t j = 0; j < total; ++j) obj[j] -= f * rows[leave][j];
    }
    basis[leave] = enter;
  }

  Rat artificial_total = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n) artificial_total += rhs[i];
  return artificial_total == 0;
}

}  // namespace

bool interior_contains_zero(const std::vector<std::vector<long long>>& points) {
  if (points.empty())
    throw std::invalid_argument("interior_contains_zero: no points");
  const std::size_t dim = points.front().size();
  for (const auto& p : points)
    if (p.size() != dim)
      throw std::invalid_argument("interior_contains_zero: dimension mismatch");

  // Presolve.  A coordinate where all points have one sign (not all zero)
  // makes sum lambda_i p_i = 0 impossible for lambda_i >= 1; if every
  // coordinate sums to zero, lambda_i = 1 is itself a witness.
  std::vector<Int> sums(dim, Int(0));
  bool all_sums_zero = true;
  for (std::size_t j = 0; j < dim; ++j) {
    bool pos = false, neg = false;
    for (const auto& p : points) {
      sums[j] += static_cast<long>(p[j]);
      pos |= p[j] > 0;
      neg |= p[j] < 0;
    }
    if (pos != neg) return false;
    if (sums[j] != 0) all_sums_zero = false;
  }
  if (all_sums_zero) return true;

  // Substitute mu_i = lambda_i - 1 >= 0:  sum mu_i p_i = -sum p_i.
  std::vector<std::vector<Rat>> rows(dim, std::vector<Rat>(points.size()));
  std::vector<Rat> rhs(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < points.size(); ++i)
      rows[j][i] = static_cast<long>(points[i][j]);
    rhs[j] = Rat(-sums[j]);
  }
  return lp_feasible(std::move(rows), std::move(rhs));
}

// --- integer echelon form --------------------------------------------------

namespace {

struct Echelon {
  std::vector<std::vector<Int>> rows;   // nonzero rows, staircase shape
  std::vector<std::size_t> pivot_cols;  // strictly increasing, one per row
};

void row_addmul(std::vector<Int>& target, const std::vector<Int>& source, const Int& factor) {
  for (std::size_t j = 0; j < target.size(); ++j) target[j] += factor * source[j];
}

// Hermite-style echelon form over Z: pivots positive, entries above a pivot
// reduced into [0, pivot), rows deterministic for a given input.
Echelon integer_echelon(std::vector<std::vector<Int>> rows) {
  Echelon out;
  if (rows.empty()) return out;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = rank; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() ||
            mpz_cmpabs(rows[i][col].get_mpz_t(), rows[best][col].get_mpz_t()) < 0)
          best = i;
      }
      if (best == rows.size()) break;  // column clear below rank
      std::swap(rows[rank], rows[best]);
      bool clear = true;
      for (std::size_t i = rank + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Int q = rows[i][col] / rows[rank][col];  // truncated: Euclidean descent
        if (q != 0) row_addmul(rows[i], rows[rank], -q);
        clear &= rows[i][col] == 0;
      }
      if (clear) break;
    }
    if (rows[rank][col] == 0) continue;  // no pivot in this column
    if (rows[rank][col] < 0)
      for (auto& v : rows[rank]) v = -v;
    out.pivot_cols.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  // Reduce entries above each pivot into [0, pivot) with floor division.
  for (std::size_t r = rank; r-- > 0;) {
    const std::size_t c = out.pivot_cols[r];
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i][c] == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (q != 0) row_addmul(rows[i], rows[r], -q);
    }
  }
  out.rows = std::move(rows);
  return out;
}

std::vector<std::vector<Int>> combined_rows(const WeightSystem& ws,
                                            const std::vector<int>& subset) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(subset.size());
  for (int idx : subset) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= ws.size())
      throw std::invalid_argument("subset index out of range");
    std::vector<Int> row;
    row.reserve(static_cast<std::size_t>(ws.l + ws.r));
    for (long long w : ws.weights[static_cast<std::size_t>(idx)])
      row.emplace_back(static_cast<long>(w));
    for (long long d : ws.degrees[static_cast<std::size_t>(idx)])
      row.emplace_back(static_cast<long>(d));
    rows.push_back(std::move(row));
  }
  return rows;
}

long long to_long_checked(const Int& v) {
  if (!v.fits_slong_p())
    throw BoundError("kernel lattice entry exceeds machine integer range");
  return v.get_si();
}

}  // namespace

std::vector<std::vector<Int>> kernel_lattice(const WeightSystem& ws,
                                             const std::vector<int>& subset) {
  ws.validate();
  Echelon ech = integer_echelon(combined_rows(ws, subset));
  std::vector<std::vector<Int>> kernel;
  for (std::size_t i = 0; i < ech.rows.size(); ++i) {
    if (ech.pivot_cols[i] < static_cast<std::size_t>(ws.l)) continue;
    kernel.emplace_back(ech.rows[i].begin() + ws.l, ech.rows[i].end());
  }
  return kernel;
}

CycloFactored torus_udenom_general(const WeightSystem& ws, int subset_bound) {
  ws.validate();
  const std::size_t n = ws.size();
  if (n > static_cast<std::size_t>(subset_bound))
    throw BoundError("torus subset enumeration over " + std::to_string(n) +
                     " coordinates exceeds bound " + std::to_string(subset_bound));

  CycloFactored result;
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    std::vector<int> subset;
    std::vector<std::vector<long long>> points;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ul << i)) {
        subset.push_back(static_cast<int>(i));
        points.push_back(ws.weights[i]);
      }
    if (!interior_contains_zero(points)) continue;

    Echelon ech = integer_echelon(combined_rows(ws, subset));
    std::size_t weight_rank = 0;
    std::vector<std::vector<Int>> kernel;
    for (std::size_t i = 0; i < ech.rows.size(); ++i) {
      if (ech.pivot_cols[i] < static_cast<std::size_t>(ws.l))
        ++weight_rank;
      else
        kernel.emplace_back(ech.rows[i].begin() + ws.l, ech.rows[i].end());
    }
    // A qualifying subset carries a positive integer relation sum a_i w_i = 0,
    // hence the nonzero kernel vector sum a_i deg_i: rank 0 cannot happen.
    if (kernel.empty())
      throw ConsistencyError("torus enumeration: qualifying subset with trivial kernel");
    // Rank >= 2 kernels fit in no rank-1 lattice Z*d.
    if (kernel.size() >= 2) continue;

    DegreeVector g(kernel.front().size());
    for (std::size_t j = 0; j < g.size(); ++j) g[j] = to_long_checked(kernel.front()[j]);
    bool has_pos = false, has_neg = false;
    for (long long e : g) {
      has_pos |= e > 0;
      has_neg |= e < 0;
    }
    if (has_neg && !has_pos)
      for (auto& e : g) e = -e;
    else if (has_neg && has_pos)
      // The kernel contains the positive vector sum a_i deg_i, so a rank-1
      // generator is sign-definite.
      throw ConsistencyError("torus enumeration: mixed-sign kernel generator");

    const long long mult = static_cast<long long>(subset.size()) -
                           static_cast<long long>(weight_rank);
    const long long content = vec_content(g);
    const DegreeVector prim = vec_primitive(g);
    for (long long j = 1; j <= content; ++j) {
      if (content % j != 0) continue;
      result = factored_lcm(result, CycloFactored::power(vec_scale(prim, j), mult));
    }
  }
  return result;
}

CycloFactored torus_udenom_rank1(const std::vector<long long>& weights,
                                 Rank1Evidence* evidence) {
  if (weights.empty()) throw std::invalid_argument("torus_udenom_rank1: no weights");

  long long zero_count = 0;
  bool has_pos = false, has_neg = false;
  long long wmin = weights.front(), wmax = weights.front();
  for (long long w : weights) {
    zero_count += w == 0;
    has_pos |= w > 0;
    has_neg |= w < 0;
    wmin = std::min(wmin, w);
    wmax = std::max(wmax, w);
  }
  const bool mixed = has_pos && has_neg;
  const long long m1 = mixed ? static_cast<long long>(weights.size()) - 1 : zero_count;
  const long long spread = wmax - wmin;
  if (spread > 1'000'000)
    throw BoundError("weight spread " + std::to_string(spread) +
                     " exceeds the rank-1 enumeration bound 1000000");

  if (evidence) {
    *evidence = Rank1Evidence{};
    evidence->m1 = m1;
    evidence->mixed_signs = mixed;
    evidence->zero_count = zero_count;
  }

  CycloFactored result = CycloFactored::power({1}, m1);
  for (long long d = 2; d <= spread; ++d) {
    long long best = 0;
    std::vector<std::tuple<long long, long long, long long>> classes;
    for (long long a = 1; a * d <= spread; ++a) {
      const long long modulus = a * d;
      for (long long b = 1; b < d; ++b) {
        if (std::gcd(b, d) != 1) continue;
        const long long lambda = a * b;  // already in [0, modulus)
        long long count = 0;
        bool cpos = false, cneg = false;
        for (long long w : weights) {
          long long residue = w % modulus;
          if (residue < 0) residue += modulus;
          if (residue != lambda) continue;
          ++count;
          cpos |= w > 0;
          cneg |= w < 0;
        }
        if (count > 0 && cpos && cneg) {
          classes.emplace_back(lambda, modulus, count);
          best = std::max(best, count - 1);
        }
      }
    }
    if (best > 0) {
      result.multiply_by({d}, best);
      if (evidence) {
        evidence->m[d] = best;
        evidence->classes[d] = std::move(classes);
      }
    }
  }
  return result;
}

CycloFactored binary_torus_udenom_closed(long long n) {
  if (n < 3) throw std::invalid_argument("binary_torus_udenom_closed: n must be >= 3");
  CycloFactored out;
  auto mul_one_minus = [&out](long long k) { out = factored_mul(out, factor_one_minus({k})); };
  if (n == 4) {
    // Degenerate corner, pinned to the enumerated value (1-t)^2 (1-t^2)(1-t^3).
    mul_one_minus(1);
    mul_one_minus(1);
    mul_one_minus(2);
    mul_one_minus(3);
  } else if (n % 2 == 1) {
    mul_one_minus(2);
    for (long long j = 1; j <= n - 1; ++j) mul_one_minus(2 * j);
  } else if (n % 4 == 2) {
    mul_one_minus(2);
    for (long long k = 1; k <= n - 1; ++k) mul_one_minus(k);
  } else {
    for (long long k = 1; k <= n - 3; ++k) mul_one_minus(k);
    mul_one_minus(2);
    mul_one_minus(n / 2 - 1);
    mul_one_minus(n - 1);
  }
  return out;
}

}  // namespace udenom
