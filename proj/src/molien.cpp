#include "udenom/molien.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "udenom/errors.hpp"

namespace udenom {

RootFraction RootFraction::reduced(long long num, long long den) {
  if (den < 1) throw std::invalid_argument("RootFraction: denominator must be >= 1");
  num %= den;
  if (num < 0) num += den;
  long long g = std::gcd(num, den);
  if (g == 0) g = den;  // num == 0 -> 0/1
  return RootFraction{num == 0 ? 0 : num / g, num == 0 ? 1 : den / g};
}

long long CycleType::degree() const {
  return std::accumulate(parts.begin(), parts.end(), 0LL);
}

int CycleType::parity() const {
  long long transpositions = degree() - static_cast<long long>(parts.size());
  return transpositions % 2 == 0 ? 1 : -1;
}

std::string CycleType::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  os << ')';
  return os.str();
}

RootMultiset eigen_from_cycle_type(const CycleType& type) {
  RootMultiset out;
  for (long long k : type.parts) {
    if (k < 1) throw std::invalid_argument("eigen_from_cycle_type: invalid part");
    for (long long j = 0; j < k; ++j) ++out[RootFraction::reduced(j, k)];
  }
  return out;
}

CycloFactored eigen_to_factored(const RootMultiset& eigen) {
  std::set<long long> orders;
  for (const auto& [f, mult] : eigen) {
    if (mult <= 0) throw std::invalid_argument("eigen_to_factored: nonpositive multiplicity");
    orders.insert(f.den);
  }
  CycloFactored out;
  for (long long d : orders) {
    long long common = -1;
    for (long long b = (d == 1 ? 0 : 1); b < std::max<long long>(d, 1); ++b) {
      if (d > 1 && std::gcd(b, d) != 1) continue;
      auto it = eigen.find(RootFraction{b, d});
      long long mult = (it == eigen.end() ? 0 : it->second);
      if (common == -1)
        common = mult;
      else if (common != mult)
        throw GaloisUnstableError(
            "eigenvalue multiplicities differ across primitive fractions of order " +
            std::to_string(d));
    }
    out.multiply_by(DegreeVector{d}, common);
  }
  return out;
}

SparsePoly char_det_factored(const RootMultiset& eigen) {
  return eigen_to_factored(eigen).expand();
}

// --- permutation closure -------------------------------------------------

namespace {

using Perm = std::vector<int>;  // 0-based images

CycleType cycle_type_of(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<long long> parts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(p[j]);
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return CycleType{std::move(parts)};
}

Perm compose(const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

}  // namespace

std::vector<std::pair<CycleType, Int>> perm_group_closure(const PermSpec& spec, long long bound) {
  if (spec.n < 1) throw ConsistencyError("permutation group: n must be >= 1");
  std::vector<Perm> gens;
  for (const auto& images : spec.generators) {
    if (static_cast<long long>(images.size()) != spec.n)
      throw ConsistencyError("permutation generator: wrong length");
    Perm p(spec.n);
    std::vector<bool> hit(spec.n, false);
    for (long long i = 0; i < spec.n; ++i) {
      long long img = images[i];
      if (img < 1 || img > spec.n || hit[img - 1])
        throw ConsistencyError("permutation generator: not a permutation of 1..n");
      hit[img - 1] = true;
      p[i] = static_cast<int>(img - 1);
    }
    gens.push_back(std::move(p));
  }

  Perm identity(spec.n);
  std::iota(identity.begin(), identity.end(), 0);
  std::set<Perm> elements{identity};
  std::queue<Perm> frontier;
  frontier.push(identity);
  while (!frontier.empty()) {
    Perm cur = std::move(frontier.front());
    frontier.pop();
    for (const Perm& g : gens) {
      Perm next = compose(cur, g);
      if (elements.insert(next).second) {
        if (static_cast<long long>(elements.size()) > bound)
          throw BoundError("group closure exceeds element bound " + std::to_string(bound));
        frontier.push(std::move(next));
      }
    }
  }

  std::map<CycleType, Int> counts;
  for (const Perm& p : elements) ++counts[cycle_type_of(p)];
  return {counts.begin(), counts.end()};
}

// --- family classes -------------------------------------------------------

namespace {

void partitions_rec(long long remaining, long long max_part, std::vector<long long>& cur,
                    std::vector<std::vector<long long>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (long long p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

Int factorial(long long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

// |class of cycle type kappa in S_n| = n! / prod_k (k^{m_k} * m_k!).
Int class_size(long long n, const std::vector<long long>& parts) {
  Int z = 1;
  std::map<long long, long long> mult;
  for (long long k : parts) ++mult[k];
  for (const auto& [k, m] : mult) {
    for (long long i = 0; i < m; ++i) z *= static_cast<long>(k);
    z *= factorial(m);
  }
  return factorial(n) / z;
}

}  // namespace

std::vector<std::pair<CycleType, Int>> conjugacy_classes(const FamilySpec& spec) {
  long long n = spec.n;
  if (spec.family == Family::Symmetric && n < 1)
    throw ConsistencyError("symmetric family: n must be >= 1");
  if (spec.family == Family::Alternating && n < 3)
    throw ConsistencyError("alternating family: n must be >= 3");
  if (n > 64) throw BoundError("family group: n > 64 not supported (partition growth)");

  std::vector<std::vector<long long>> parts_list;
  std::vector<long long> cur;
  partitions_rec(n, n, cur, parts_list);

  std::vector<std::pair<CycleType, Int>> out;
  for (auto& parts : parts_list) {
    CycleType type{parts};
    if (spec.family == Family::Alternating && type.parity() != 1) continue;
    // Classes with all parts odd and distinct split in two equal halves
    // inside the alternating group; they share a cycle type, so the
    // aggregated count is the plain S_n class size either way.
    out.emplace_back(std::move(type), class_size(n, parts));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// --- unified classes ------------------------------------------------------

namespace {

long long multiset_dimension(const RootMultiset& eigen) {
  long long dim = 0;
  for (const auto& [f, m] : eigen) dim += m;
  return dim;
}

}  // namespace

std::vector<ConjClassEigen> group_classes(const GroupSpec& spec, long long bound) {
  std::vector<ConjClassEigen> classes;
  if (const auto* elems = std::get_if<ElementsSpec>(&spec)) {
    if (elems->elements.empty()) throw ConsistencyError("element list: empty group");
    long long dim = multiset_dimension(elems->elements.front());
    if (dim < 1) throw ConsistencyError("element list: empty eigenvalue multiset");
    bool has_identity = false;
    RootMultiset identity{{RootFraction{0, 1}, dim}};
    for (const auto& eigen : elems->elements) {
      if (multiset_dimension(eigen) != dim)
        throw ConsistencyError("element list: inconsistent dimensions");
      if (eigen == identity) has_identity = true;
      classes.push_back({eigen, Int(1)});
    }
    if (!has_identity) throw ConsistencyError("element list: identity element missing");
    if (static_cast<long long>(classes.size()) > bound)
      throw BoundError("element list exceeds bound");
  } else if (const auto* perm = std::get_if<PermSpec>(&spec)) {
    for (auto& [type, count] : perm_group_closure(*perm, bound))
      classes.push_back({eigen_from_cycle_type(type), count});
  } else {
    const auto& family = std::get<FamilySpec>(spec);
    for (auto& [type, count] : conjugacy_classes(family))
      classes.push_back({eigen_from_cycle_type(type), count});
  }
  return classes;
}

Int group_order(const std::vector<ConjClassEigen>& classes) {
  Int order = 0;
  for (const auto& c : classes) order += c.size;
  return order;
}

CycloFactored udenom_finite_classes(const std::vector<ConjClassEigen>& classes) {
  RootMultiset max;
  for (const auto& c : classes)
    for (const auto& [f, mult] : c.eigen) {
      long long& cur = max[f];
      cur = std::max(cur, mult);
    }
  return eigen_to_factored(max);
}

CycloFactored udenom_finite(const GroupSpec& spec, long long bound) {
  return udenom_finite_classes(group_classes(spec, bound));
}

RationalFn molien_series_classes(const std::vector<ConjClassEigen>& classes) {
  Int order = group_order(classes);
  std::vector<std::pair<Rat, CycloFactored>> terms;
  terms.reserve(classes.size());
  for (const auto& c : classes) {
    Rat coeff(c.size);
    coeff /= Rat(order);
    terms.emplace_back(coeff, eigen_to_factored(c.eigen));
  }
  return rational_sum(terms);
}

RationalFn molien_series(const GroupSpec& spec, long long bound) {
  return molien_series_classes(group_classes(spec, bound));
}

// --- closed forms ----------------------------------------------------------

CycloFactored sym_udenom_closed(long long n) {
  if (n < 1) throw std::invalid_argument("sym_udenom_closed: n must be >= 1");
  CycloFactored out;
  for (long long k = 1; k <= n; ++k) out = factored_mul(out, factor_one_minus({k}));
  return out;
}

CycloFactored alt_udenom_closed(long long n) {
  if (n < 3) throw std::invalid_argument("alt_udenom_closed: n must be >= 3");
  CycloFactored out;
  for (long long d = 1; d <= n; ++d) {
    long long q = n / d;
    bool full = (d % 2 == 1) || (q % 2 == 0) || (d * q <= n - 2);
    long long m = full ? q : q - 1;
    out.multiply_by({d}, m);
  }
  return out;
}

CycloFactored alt_denom_closed(long long n) {
  if (n < 3) throw std::invalid_argument("alt_denom_closed: n must be >= 3");
  long long nn = n * (n - 1);
  CycloFactored out;
  for (long long d = 1; d <= n; ++d) {
    long long q = n / d;
    bool odd_quotient = (nn % d == 0) && ((nn / d) % 2 == 1);
    long long a = odd_quotient ? std::max<long long>(0, q - 1) : q;
    out.multiply_by({d}, a);
  }
  return out;
}

RationalFn alt_hilbert_closed(long long n) {
  if (n < 3) throw std::invalid_argument("alt_hilbert_closed: n must be >= 3");
  SparsePoly num = SparsePoly::one(1);
  num.add_term({n * (n - 1) / 2}, 1);
  return reduce_rational(num, sym_udenom_closed(n));
}

}  // namespace udenom
