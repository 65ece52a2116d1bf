#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "udenom/cyclo.hpp"
#include "udenom/degree.hpp"
#include "udenom/sparse_poly.hpp"

using namespace udenom;

namespace {

long long euler_phi(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

SparsePoly one_minus_power(const DegreeVector& d) {
  SparsePoly f = SparsePoly::one(static_cast<int>(d.size()));
  f.add_term(d, -1);
  return f;
}

CycloFactored random_factored(std::mt19937& rng) {
  std::uniform_int_distribution<long long> order(1, 12);
  std::uniform_int_distribution<long long> exp(1, 4);
  std::uniform_int_distribution<int> nfactors(0, 4);
  CycloFactored f;
  const int k = nfactors(rng);
  for (int i = 0; i < k; ++i) f.multiply_by({order(rng)}, exp(rng));
  return f;
}

}  // namespace

TEST_CASE("cyclo_key splits a degree into content and primitive direction") {
  CHECK(cyclo_key({6}) == CycloKey{6, {1}});
  CHECK(cyclo_key({4, 2}) == CycloKey{2, {2, 1}});
  CHECK(cyclo_key({3, 5}) == CycloKey{1, {3, 5}});
  CHECK(cyclo_key({4, 2}).degree() == DegreeVector{4, 2});
}

TEST_CASE("small univariate expansions") {
  CHECK(cyclo_expand(1, {1}).to_string() == "1 - t");
  CHECK(cyclo_expand(2, {1}).to_string() == "1 + t");
  CHECK(cyclo_expand(3, {1}).to_string() == "1 + t + t^2");
  CHECK(cyclo_expand(4, {1}).to_string() == "1 + t^2");
  CHECK(cyclo_expand(6, {1}).to_string() == "1 - t + t^2");
  CHECK(cyclo_expand_dense(5) == std::vector<Int>({1, 1, 1, 1, 1}));
  CHECK(cyclo_expand_dense(8) == std::vector<Int>({1, 0, 0, 0, 1}));
  CHECK(cyclo_expand_dense(9) == std::vector<Int>({1, 0, 0, 1, 0, 0, 1}));
  CHECK(cyclo_expand_dense(12) == std::vector<Int>({1, 0, -1, 0, 1}));
}

TEST_CASE("normalization: constant term 1, degree = Euler phi for k >= 2") {
  for (long long k = 1; k <= 60; ++k) {
    const std::vector<Int> c = cyclo_expand_dense(k);
    REQUIRE(!c.empty());
    CHECK(c.front() == 1);
    const long long deg = static_cast<long long>(c.size()) - 1;
    if (k == 1) {
      CHECK(deg == 1);
      CHECK(c.back() == -1);
    } else {
      CHECK(deg == euler_phi(k));
      CHECK(c.back() == 1);
    }
  }
}

TEST_CASE("product over divisors reconstructs 1 - t^k (univariate, k <= 60)") {
  for (long long k = 1; k <= 60; ++k) {
    SparsePoly prod = SparsePoly::one(1);
    for (long long j = 1; j <= k; ++j)
      if (k % j == 0) prod = prod * cyclo_expand(j, {1});
    CHECK(prod == one_minus_power({k}));
  }
}

TEST_CASE("factor_one_minus round-trips in several variables") {
  // All degree vectors with 1 <= sum of entries <= 12 in r = 1, 2, 3 variables.
  for (int r = 1; r <= 3; ++r) {
    std::vector<DegreeVector> all;
    DegreeVector cur(r, 0);
    const long long cap = 12;
    auto rec = [&](auto&& self, int pos, long long remaining) -> void {
      if (pos == r) {
        if (!vec_is_zero(cur)) all.push_back(cur);
        return;
      }
      for (long long v = 0; v <= remaining; ++v) {
        cur[pos] = v;
        self(self, pos + 1, remaining - v);
      }
      cur[pos] = 0;
    };
    rec(rec, 0, cap);
    for (const DegreeVector& d : all) {
      const CycloFactored f = factor_one_minus(d);
      CHECK(f.expand() == one_minus_power(d));
      // Factor count = number of divisors of the content.
      const long long c = vec_content(d);
      long long ndiv = 0;
      for (long long j = 1; j <= c; ++j) ndiv += c % j == 0;
      CHECK(static_cast<long long>(f.factors().size()) == ndiv);
    }
  }
}

TEST_CASE("multivariate expansion substitutes the primitive direction") {
  const SparsePoly f = cyclo_expand(2, {2, 1});
  SparsePoly expected = SparsePoly::one(2);
  expected.add_term({2, 1}, 1);  // 1 + t1^2 t2
  CHECK(f == expected);
  CHECK(cyclo_expand(1, {1, 1}) == one_minus_power({1, 1}));
}

TEST_CASE("power and multiply_by edge cases") {
  CHECK(CycloFactored::power({3}, 0) == CycloFactored::one());
  CHECK(CycloFactored::power({3}, 2).exponent_of_degree({3}) == 2);
  CHECK_THROWS_AS(CycloFactored::power({3}, -1), std::invalid_argument);
  CycloFactored f = CycloFactored::power({2}, 3);
  f.multiply_by({2}, -3);
  CHECK(f.is_one());
  CHECK_THROWS_AS(f.multiply_by({2}, -1), std::invalid_argument);
  CycloFactored uni = CycloFactored::power({2}, 1);
  CHECK_THROWS_AS(uni.multiply_by({2, 1}, 1), std::invalid_argument);
}

TEST_CASE("factored to_string formats") {
  CHECK(CycloFactored::one().to_string() == "1");
  CycloFactored f;
  f.multiply_by({1}, 4);
  f.multiply_by({2}, 2);
  f.multiply_by({3}, 1);
  CHECK(f.to_string() == "phi_1^4 phi_2^2 phi_3");
  CycloFactored g = CycloFactored::power({4, 2}, 1);
  CHECK(g.to_string() == "phi_(4,2)");
}

TEST_CASE("lattice laws on random factored values") {
  std::mt19937 rng(987654321);
  for (int iter = 0; iter < 500; ++iter) {
    const CycloFactored a = random_factored(rng);
    const CycloFactored b = random_factored(rng);
    const CycloFactored l = factored_lcm(a, b);
    const CycloFactored g = factored_gcd(a, b);
    CHECK(factored_mul(g, l) == factored_mul(a, b));
    CHECK(factored_divides(a, l));
    CHECK(factored_divides(b, l));
    CHECK(factored_divides(g, a));
    CHECK(factored_divides(g, b));
    CHECK(factored_quotient(factored_mul(a, b), b) == a);
    if (factored_divides(a, b)) CHECK(factored_mul(factored_quotient(b, a), a) == b);
  }
}

TEST_CASE("expansion is multiplicative") {
  std::mt19937 rng(24681012);
  for (int iter = 0; iter < 25; ++iter) {
    const CycloFactored a = random_factored(rng);
    const CycloFactored b = random_factored(rng);
    CHECK(factored_mul(a, b).expand() == a.expand() * b.expand());
  }
}

TEST_CASE("one-minus regrouping reproduces classical displays") {
  // phi_1^3 phi_2 phi_3 = (1-t)(1-t^2)(1-t^3)
  CycloFactored sym3;
  sym3.multiply_by({1}, 3);
  sym3.multiply_by({2}, 1);
  sym3.multiply_by({3}, 1);
  auto form = one_minus_form(sym3);
  REQUIRE(form.has_value());
  CHECK(one_minus_form_to_string(*form) == "(1-t)(1-t^2)(1-t^3)");

  // phi_1^4 phi_2^2 phi_3 phi_4 phi_5 phi_7 phi_8 has no pure one-minus form
  // (phi_7 without phi_1 at the right multiplicity), while simple products do.
  CycloFactored d3;
  d3.multiply_by({1}, 3);
  d3.multiply_by({2}, 3);
  d3.multiply_by({4}, 1);
  form = one_minus_form(d3);
  REQUIRE(form.has_value());
  CHECK(one_minus_form_to_string(*form) == "(1-t^2)^2(1-t^4)");

  // (1+t)(1-t^2)(1-t^3)(1-t^4)(1-t^5) needs the extended shape.
  CycloFactored sl6;
  sl6.multiply_by({2}, 1);
  for (long long k : {2, 3, 4, 5}) sl6 = factored_mul(sl6, factor_one_minus({k}));
  CHECK_FALSE(one_minus_form(sl6).has_value());
  auto plus = one_minus_plus_form(sl6);
  REQUIRE(plus.has_value());
  CHECK(one_minus_plus_form_to_string(*plus) == "(1+t)(1-t^2)(1-t^3)(1-t^4)(1-t^5)");

  CHECK(one_minus_form(CycloFactored::one()).has_value());
  CHECK(one_minus_form_to_string(*one_minus_form(CycloFactored::one())) == "1");
}

TEST_CASE("regrouped forms expand to the same polynomial") {
  std::mt19937 rng(55555);
  std::uniform_int_distribution<long long> kdist(1, 9);
  for (int iter = 0; iter < 40; ++iter) {
    // Random product of (1 - t^k) factors has a one-minus form by construction.
    CycloFactored f;
    std::map<long long, long long> expected;
    const int nf = static_cast<int>(kdist(rng)) % 4 + 1;
    for (int i = 0; i < nf; ++i) {
      const long long k = kdist(rng);
      f = factored_mul(f, factor_one_minus({k}));
      ++expected[k];
    }
    auto form = one_minus_form(f);
    REQUIRE(form.has_value());
    CHECK(std::map<long long, long long>(form->begin(), form->end()) == expected);
  }
}
