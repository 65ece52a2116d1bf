#include "udenom/sparse_poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace udenom {

bool GradedLex::operator()(const std::vector<long long>& a, const std::vector<long long>& b) const {
  long long da = std::accumulate(a.begin(), a.end(), 0LL);
  long long db = std::accumulate(b.begin(), b.end(), 0LL);
  if (da != db) return da < db;
  return a < b;
}

SparsePoly SparsePoly::constant(int arity, Int c) {
  SparsePoly p(arity);
  p.add_term(std::vector<long long>(arity, 0), c);
  return p;
}

SparsePoly SparsePoly::monomial(Int coeff, const std::vector<long long>& exps) {
  SparsePoly p(static_cast<int>(exps.size()));
  p.add_term(exps, coeff);
  return p;
}

SparsePoly SparsePoly::from_dense(const std::vector<Int>& coeffs) {
  SparsePoly p(1);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    p.add_term({static_cast<long long>(i)}, coeffs[i]);
  return p;
}

bool SparsePoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second == 1 &&
         vec_is_zero(terms_.begin()->first);
}

void SparsePoly::add_term(const std::vector<long long>& exps, const Int& coeff) {
  if (static_cast<int>(exps.size()) != arity_)
    throw std::invalid_argument("SparsePoly::add_term: arity mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Int SparsePoly::coefficient(const std::vector<long long>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Int(0) : it->second;
}

long long SparsePoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.rbegin()->first;  // graded order: last term has max degree
  return std::accumulate(e.begin(), e.end(), 0LL);
}

bool SparsePoly::has_negative_exponent() const {
  for (const auto& [e, c] : terms_)
    for (long long x : e)
      if (x < 0) return true;
  return false;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out(arity_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

SparsePoly SparsePoly::operator+(const SparsePoly& rhs) const {
  if (arity_ != rhs.arity_) throw std::invalid_argument("SparsePoly::operator+: arity mismatch");
  SparsePoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& rhs) const { return *this + (-rhs); }

SparsePoly SparsePoly::operator*(const SparsePoly& rhs) const {
  if (arity_ != rhs.arity_) throw std::invalid_argument("SparsePoly::operator*: arity mismatch");
  SparsePoly out(arity_);
  std::vector<long long> e(arity_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      for (int i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

SparsePoly SparsePoly::substitute_monomial(const DegreeVector& p) const {
  if (arity_ != 1) throw std::invalid_argument("substitute_monomial: univariate input required");
  SparsePoly out(static_cast<int>(p.size()));
  for (const auto& [e, c] : terms_) out.add_term(vec_scale(p, e[0]), c);
  return out;
}

std::vector<Int> SparsePoly::to_dense() const {
  if (arity_ != 1) throw std::invalid_argument("to_dense: univariate input required");
  if (has_negative_exponent()) throw std::invalid_argument("to_dense: negative exponent");
  std::vector<Int> dense(terms_.empty() ? 0 : terms_.rbegin()->first[0] + 1, Int(0));
  for (const auto& [e, c] : terms_) dense[e[0]] = c;
  return dense;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool constant_term = vec_is_zero(e);
    if (mag != 1 || constant_term) os << mag.get_str();
    if (!constant_term) {
      bool printed = (mag != 1);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (printed) os << ' ';
        os << (arity_ == 1 ? std::string("t") : "t" + std::to_string(i + 1));
        if (e[i] != 1) os << '^' << e[i];
        printed = true;
      }
    }
  }
  return os.str();
}

std::optional<SparsePoly> try_divide_exact(const SparsePoly& a, const SparsePoly& b) {
  if (a.arity() != 1 || b.arity() != 1)
    throw std::invalid_argument("try_divide_exact: univariate inputs required");
  if (a.has_negative_exponent() || b.has_negative_exponent())
    throw std::invalid_argument("try_divide_exact: negative exponent");
  if (b.is_zero()) throw std::invalid_argument("try_divide_exact: zero divisor");
  if (a.is_zero()) return SparsePoly::zero(1);

  std::vector<Int> rem = a.to_dense(), div = b.to_dense();
  while (!div.empty() && div.back() == 0) div.pop_back();
  long long db = static_cast<long long>(div.size()) - 1;
  long long da = static_cast<long long>(rem.size()) - 1;
  if (da < db) return std::nullopt;

  std::vector<Int> quot(da - db + 1, Int(0));
  for (long long k = da - db; k >= 0; --k) {
    Int lead = rem[k + db];
    if (lead == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), div[db].get_mpz_t())) return std::nullopt;
    Int q = lead / div[db];
    quot[k] = q;
    for (long long j = 0; j <= db; ++j) rem[k + j] -= q * div[j];
  }
  for (const Int& c : rem)
    if (c != 0) return std::nullopt;
  return SparsePoly::from_dense(quot);
}

}  // namespace udenom
