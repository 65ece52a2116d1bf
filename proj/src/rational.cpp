#include "udenom/rational.hpp"

#include <sstream>
#include <stdexcept>

#include "udenom/errors.hpp"

namespace udenom {

namespace {

void check_univariate(const CycloFactored& denom) {
  for (const auto& [key, e] : denom.factors())
    if (key.direction != DegreeVector{1})
      throw std::invalid_argument("rational function: univariate denominator required");
}

}  // namespace

std::string RationalFn::to_string() const {
  std::ostringstream os;
  os << '(' << numerator.to_string() << ')';
  if (!denominator.is_one()) os << " / " << denominator.to_string();
  return os.str();
}

RationalFn reduce_rational(const SparsePoly& numerator, const CycloFactored& denominator) {
  if (numerator.arity() != 1)
    throw std::invalid_argument("reduce_rational: univariate numerator required");
  if (numerator.has_negative_exponent())
    throw std::invalid_argument("reduce_rational: negative exponent in numerator");
  check_univariate(denominator);

  if (numerator.is_zero()) return RationalFn{numerator, CycloFactored::one()};

  SparsePoly num = numerator;
  CycloFactored denom;
  for (const auto& [key, e] : denominator.factors()) {
    SparsePoly phi = cyclo_expand(key.order, key.direction);
    long long remaining = e;
    while (remaining > 0) {
      auto q = try_divide_exact(num, phi);
      if (!q) break;
      num = *q;
      --remaining;
    }
    if (remaining > 0) denom.multiply_by(key.degree(), remaining);
  }
  return RationalFn{num, denom};
}

RationalFn rational_sum(const std::vector<std::pair<Rat, CycloFactored>>& terms) {
  if (terms.empty()) return RationalFn{SparsePoly::zero(1), CycloFactored::one()};

  CycloFactored common;
  Int scale = 1;  // lcm of coefficient denominators
  for (const auto& [c, denom] : terms) {
    check_univariate(denom);
    common = factored_lcm(common, denom);
    Int d(c.get_den());
    scale = lcm(scale, d);
  }

  SparsePoly num = SparsePoly::zero(1);
  for (const auto& [c, denom] : terms) {
    Int coeff = Int(c.get_num()) * (scale / Int(c.get_den()));
    SparsePoly cofactor = factored_quotient(common, denom).expand();
    num = num + SparsePoly::constant(1, coeff) * cofactor;
  }

  RationalFn reduced = reduce_rational(num, common);
  if (scale != 1) {
    SparsePoly scaled(1);
    for (const auto& [e, c] : reduced.numerator.terms()) {
      if (!mpz_divisible_p(c.get_mpz_t(), scale.get_mpz_t()))
        throw ConsistencyError("rational_sum: non-integral result");
      scaled.add_term(e, c / scale);
    }
    reduced.numerator = scaled;
  }
  return reduced;
}

std::vector<Int> series_expand(const RationalFn& f, long long order) {
  if (order < 0) throw std::invalid_argument("series_expand: negative order");
  if (f.numerator.arity() != 1 || f.numerator.has_negative_exponent())
    throw std::invalid_argument("series_expand: univariate polynomial numerator required");
  check_univariate(f.denominator);

  std::vector<Int> a(order + 1, Int(0));
  for (const auto& [e, c] : f.numerator.terms())
    if (e[0] <= order) a[e[0]] = c;

  std::vector<Int> b = f.denominator.expand().to_dense();  // b[0] = 1
  std::vector<Int> out(order + 1, Int(0));
  for (long long k = 0; k <= order; ++k) {
    Int v = a[k];
    long long jmax = std::min<long long>(k, static_cast<long long>(b.size()) - 1);
    for (long long j = 1; j <= jmax; ++j) v -= b[j] * out[k - j];
    out[k] = v;
  }
  return out;
}

}  // namespace udenom
