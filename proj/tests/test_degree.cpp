#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "udenom/degree.hpp"

using namespace udenom;

TEST_CASE("vec_divides follows the scalar-multiple rule") {
  CHECK(vec_divides({2}, {4}));
  CHECK(vec_divides({2}, {2}));
  CHECK_FALSE(vec_divides({4}, {2}));
  CHECK(vec_divides({4, 2}, {12, 6}));
  CHECK_FALSE(vec_divides({4, 2}, {12, 4}));
  CHECK_FALSE(vec_divides({4, 2}, {2, 2}));
  // Zero target counts as the k = 0 multiple.
  CHECK(vec_divides({4, 2}, {0, 0}));
  // Zero coordinates must match exactly.
  CHECK(vec_divides({2, 0}, {6, 0}));
  CHECK_FALSE(vec_divides({2, 0}, {6, 1}));
  CHECK_THROWS_AS(vec_divides({0, 0}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(vec_divides({1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("vec_lcm of parallel and non-parallel vectors") {
  CHECK(vec_lcm({4, 2}, {6, 3}) == DegreeVector{12, 6});
  CHECK(vec_lcm({4, 2}, {2, 2}) == DegreeVector{0, 0});
  CHECK(vec_lcm({2}, {3}) == DegreeVector{6});
  CHECK(vec_lcm({6}, {4}) == DegreeVector{12});
  CHECK(vec_lcm({1, 2}, {2, 4}) == DegreeVector{2, 4});
  CHECK_THROWS_AS(vec_lcm({0}, {1}), std::invalid_argument);
}

TEST_CASE("content, primitive, scale") {
  CHECK(vec_content({4, 2}) == 2);
  CHECK(vec_content({6}) == 6);
  CHECK(vec_content({3, 5}) == 1);
  CHECK(vec_primitive({4, 2}) == DegreeVector{2, 1});
  CHECK(vec_primitive({7}) == DegreeVector{1});
  CHECK(vec_scale({2, 1}, 3) == DegreeVector{6, 3});
  CHECK_THROWS_AS(vec_content({0, 0}), std::invalid_argument);
}

TEST_CASE("to_string") {
  CHECK(vec_to_string({3}) == "3");
  CHECK(vec_to_string({4, 2}) == "(4,2)");
  CHECK(vec_to_string({0, 1, 2}) == "(0,1,2)");
}

TEST_CASE("lcm is the least common multiple under vec_divides") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<long long> entry(0, 6);
  std::uniform_int_distribution<int> len(1, 3);
  int nontrivial = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const int r = len(rng);
    DegreeVector a(r), b(r);
    bool za = true, zb = true;
    for (int i = 0; i < r; ++i) {
      a[i] = entry(rng);
      b[i] = entry(rng);
      za &= a[i] == 0;
      zb &= b[i] == 0;
    }
    if (za || zb) continue;
    const DegreeVector m = vec_lcm(a, b);
    if (vec_is_zero(m)) {
      // No common multiple may exist below a modest search cap.
      for (long long k = 1; k <= 12; ++k) {
        CHECK_FALSE(vec_divides(b, vec_scale(a, k)));
      }
      continue;
    }
    ++nontrivial;
    CHECK(vec_divides(a, m));
    CHECK(vec_divides(b, m));
    // Minimality: no proper divisor of m is a common multiple.
    const long long c = vec_content(m);
    for (long long k = 1; k < c; ++k) {
      if (c % k != 0) continue;
      const DegreeVector smaller = vec_scale(vec_primitive(m), k);
      CHECK_FALSE((vec_divides(a, smaller) && vec_divides(b, smaller)));
    }
  }
  CHECK(nontrivial > 50);
}
