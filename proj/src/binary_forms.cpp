#include "udenom/binary_forms.hpp"

#include <stdexcept>

namespace udenom {

CycloFactored binary_forms_torus_udenom(long long n) {
  if (n < 3) throw std::invalid_argument("binary_forms_torus_udenom: n must be >= 3");
  std::vector<long long> weights;
  weights.reserve(static_cast<std::size_t>(n + 1));
  for (long long w = -n; w <= n; w += 2) weights.push_back(w);
  return torus_udenom_rank1(weights);
}

CycloFactored sl2_udenom_via_torus(long long n) {
  if (n < 3) throw std::invalid_argument("sl2_udenom_via_torus: n must be >= 3");
  const CycloFactored torus = binary_forms_torus_udenom(n);
  CycloFactored out;
  out.multiply_by({1}, n - 2);
  out.multiply_by({2}, n % 2 == 1 ? n - 2 : torus.exponent_of_degree({2}));
  for (const auto& [key, exp] : torus.factors()) {
    if (key.degree() == DegreeVector{1} || key.degree() == DegreeVector{2}) continue;
    out.multiply_by(key.degree(), exp);
  }
  return out;
}

CycloFactored dixmier_closed(long long n) {
  if (n < 3) throw std::invalid_argument("dixmier_closed: n must be >= 3");
  CycloFactored out;
  auto mul_one_minus = [&out](long long k) { out = factored_mul(out, factor_one_minus({k})); };
  if (n % 2 == 1) {
    for (long long j = 2; j <= n - 1; ++j) mul_one_minus(2 * j);
  } else if (n % 4 == 2) {
    out.multiply_by({2}, 1);  // the (1 + t) factor
    for (long long k = 2; k <= n - 1; ++k) mul_one_minus(k);
  } else {
    out.multiply_by({2}, 1);  // the (1 + t) factor
    for (long long k = 2; k <= n - 3; ++k) mul_one_minus(k);
    mul_one_minus(n / 2 - 1);
    mul_one_minus(n - 1);
  }
  return out;
}

BinaryFormsReport binary_forms_report(long long n) {
  BinaryFormsReport report;
  report.via_torus = sl2_udenom_via_torus(n);
  report.closed = dixmier_closed(n);
  report.torus_full = binary_forms_torus_udenom(n);
  report.methods_equal = report.via_torus == report.closed;
  report.divides_torus = factored_divides(report.via_torus, report.torus_full);
  return report;
}

}  // namespace udenom
