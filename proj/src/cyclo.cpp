#include "udenom/cyclo.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "udenom/errors.hpp"

namespace udenom {

CycloKey cyclo_key(const DegreeVector& d) {
  if (vec_is_zero(d)) throw std::invalid_argument("cyclo_key: zero degree");
  for (long long x : d)
    if (x < 0) throw std::invalid_argument("cyclo_key: negative entry");
  long long k = vec_content(d);
  return CycloKey{k, vec_primitive(d)};
}

namespace {

// Exact dense division, used only where divisibility is guaranteed.
std::vector<Int> dense_divide(const std::vector<Int>& a, const std::vector<Int>& b) {
  auto q = try_divide_exact(SparsePoly::from_dense(a), SparsePoly::from_dense(b));
  if (!q) throw ConsistencyError("dense_divide: inexact division");
  return q->to_dense();
}

}  // namespace

std::vector<Int> cyclo_expand_dense(long long k) {
  if (k < 1) throw std::invalid_argument("cyclo_expand_dense: order must be >= 1");
  // phi_j for the divisors j of k, ascending: phi_j = (1 - t^j) / prod_{i|j, i<j} phi_i.
  std::vector<long long> divisors;
  for (long long j = 1; j <= k; ++j)
    if (k % j == 0) divisors.push_back(j);
  std::vector<std::vector<Int>> table;
  for (std::size_t a = 0; a < divisors.size(); ++a) {
    long long j = divisors[a];
    std::vector<Int> cur(j + 1, Int(0));
    cur[0] = 1;
    cur[j] = -1;  // 1 - t^j
    for (std::size_t b = 0; b < a; ++b)
      if (j % divisors[b] == 0) cur = dense_divide(cur, table[b]);
    table.push_back(std::move(cur));
  }
  return table.back();
}

SparsePoly cyclo_expand(long long k, const DegreeVector& p) {
  if (vec_is_zero(p)) throw std::invalid_argument("cyclo_expand: zero direction");
  if (vec_content(p) != 1) throw std::invalid_argument("cyclo_expand: direction not primitive");
  return SparsePoly::from_dense(cyclo_expand_dense(k)).substitute_monomial(p);
}

CycloFactored CycloFactored::power(const DegreeVector& d, long long exp) {
  if (exp < 0) throw std::invalid_argument("CycloFactored::power: negative exponent");
  CycloFactored f;
  if (exp > 0) f.factors_[cyclo_key(d)] = exp;
  return f;
}

long long CycloFactored::exponent_of(const CycloKey& key) const {
  auto it = factors_.find(key);
  return it == factors_.end() ? 0 : it->second;
}

long long CycloFactored::exponent_of_degree(const DegreeVector& d) const {
  return exponent_of(cyclo_key(d));
}

int CycloFactored::arity() const {
  return factors_.empty() ? 1 : static_cast<int>(factors_.begin()->first.direction.size());
}

void CycloFactored::multiply_by(const DegreeVector& d, long long exp) {
  if (exp == 0) return;
  CycloKey key = cyclo_key(d);
  if (!factors_.empty() &&
      key.direction.size() != factors_.begin()->first.direction.size())
    throw std::invalid_argument("CycloFactored: mixed arities");
  long long& e = factors_[key];
  e += exp;
  if (e < 0) throw std::invalid_argument("CycloFactored: negative exponent");
  if (e == 0) factors_.erase(key);
}

namespace {

void check_compatible(const CycloFactored& a, const CycloFactored& b) {
  if (a.is_one() || b.is_one()) return;
  if (a.arity() != b.arity()) throw std::invalid_argument("CycloFactored: mixed arities");
}

}  // namespace

CycloFactored factored_mul(const CycloFactored& a, const CycloFactored& b) {
  check_compatible(a, b);
  CycloFactored out = a;
  for (const auto& [key, e] : b.factors_) out.factors_[key] += e;
  return out;
}

CycloFactored factored_lcm(const CycloFactored& a, const CycloFactored& b) {
  check_compatible(a, b);
  CycloFactored out = a;
  for (const auto& [key, e] : b.factors_) {
    long long& cur = out.factors_[key];
    cur = std::max(cur, e);
  }
  return out;
}

CycloFactored factored_gcd(const CycloFactored& a, const CycloFactored& b) {
  check_compatible(a, b);
  CycloFactored out;
  for (const auto& [key, e] : a.factors_) {
    long long m = std::min(e, b.exponent_of(key));
    if (m > 0) out.factors_[key] = m;
  }
  return out;
}

bool factored_divides(const CycloFactored& a, const CycloFactored& b) {
  check_compatible(a, b);
  for (const auto& [key, e] : a.factors_)
    if (e > b.exponent_of(key)) return false;
  return true;
}

CycloFactored factored_quotient(const CycloFactored& b, const CycloFactored& a) {
  if (!factored_divides(a, b)) throw std::invalid_argument("factored_quotient: not divisible");
  CycloFactored out = b;
  for (const auto& [key, e] : a.factors_) {
    long long& cur = out.factors_[key];
    cur -= e;
    if (cur == 0) out.factors_.erase(key);
  }
  return out;
}

SparsePoly CycloFactored::expand() const {
  SparsePoly out = SparsePoly::one(arity());
  for (const auto& [key, e] : factors_) {
    SparsePoly f = cyclo_expand(key.order, key.direction);
    for (long long i = 0; i < e; ++i) out = out * f;
  }
  return out;
}

std::string CycloFactored::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, e] : factors_) {
    if (!first) os << ' ';
    first = false;
    os << "phi_" << vec_to_string(key.degree());
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

CycloFactored factor_one_minus(const DegreeVector& d) {
  CycloKey key = cyclo_key(d);
  CycloFactored out;
  for (long long j = 1; j <= key.order; ++j)
    if (key.order % j == 0) out.multiply_by(vec_scale(key.direction, j), 1);
  return out;
}

namespace {

// Solves m_d = sum_{d | k} c_k for c, largest order first.  Returns the
// c-map (possibly with negative entries for the caller to inspect).
std::map<long long, long long> peel_one_minus(const CycloFactored& f) {
  std::map<long long, long long> m;
  long long max_order = 0;
  for (const auto& [key, e] : f.factors()) {
    if (key.direction != DegreeVector{1})
      throw std::invalid_argument("one_minus_form: univariate input required");
    m[key.order] = e;
    max_order = std::max(max_order, key.order);
  }
  std::map<long long, long long> c;
  for (long long d = max_order; d >= 1; --d) {
    long long have = 0;
    for (long long k = 2 * d; k <= max_order; k += d) {
      auto it = c.find(k);
      if (it != c.end()) have += it->second;
    }
    auto it = m.find(d);
    long long want = (it == m.end() ? 0 : it->second);
    if (want != have) c[d] = want - have;
  }
  return c;
}

}  // namespace

std::optional<std::vector<std::pair<long long, long long>>> one_minus_form(const CycloFactored& f) {
  auto c = peel_one_minus(f);
  std::vector<std::pair<long long, long long>> out;
  for (const auto& [k, ck] : c) {
    if (ck < 0) return std::nullopt;
    if (ck > 0) out.emplace_back(k, ck);
  }
  return out;
}

std::optional<OneMinusPlusForm> one_minus_plus_form(const CycloFactored& f) {
  auto c = peel_one_minus(f);
  long long deficit = 0;
  for (const auto& [k, ck] : c) {
    if (k >= 2 && ck < 0) return std::nullopt;
    if (k == 1 && ck < 0) deficit = -ck;
  }
  OneMinusPlusForm form;
  if (deficit > 0) {
    // Trade (1-t^2) factors for (1+t): each trade raises the available
    // phi_1 budget by one and keeps the phi_2 balance.
    if (c[2] < deficit) return std::nullopt;
    c[2] -= deficit;
    c[1] = 0;
    form.plus_exp = deficit;
  }
  for (const auto& [k, ck] : c)
    if (ck > 0) form.one_minus.emplace_back(k, ck);
  return form;
}

std::string one_minus_form_to_string(const std::vector<std::pair<long long, long long>>& factors) {
  if (factors.empty()) return "1";
  std::ostringstream os;
  for (const auto& [k, c] : factors) {
    os << "(1-t";
    if (k != 1) os << '^' << k;
    os << ')';
    if (c != 1) os << '^' << c;
  }
  return os.str();
}

std::string one_minus_plus_form_to_string(const OneMinusPlusForm& form) {
  std::ostringstream os;
  if (form.plus_exp > 0) {
    os << "(1+t)";
    if (form.plus_exp != 1) os << '^' << form.plus_exp;
  }
  std::string rest = one_minus_form_to_string(form.one_minus);
  if (form.plus_exp == 0 || rest != "1") os << rest;
  return os.str();
}

}  // namespace udenom
