#include "udenom/degree.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace udenom {

bool vec_is_zero(const DegreeVector& d) {
  for (long long x : d)
    if (x != 0) return false;
  return true;
}

bool vec_divides(const DegreeVector& d, const DegreeVector& e) {
  if (d.size() != e.size()) throw std::invalid_argument("vec_divides: size mismatch");
  if (vec_is_zero(d)) throw std::invalid_argument("vec_divides: zero divisor");
  if (vec_is_zero(e)) return true;  // k = 0
  long long k = -1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) {
      if (e[i] != 0) return false;
      continue;
    }
    if (e[i] % d[i] != 0) return false;
    long long q = e[i] / d[i];
    if (q < 0) return false;
    if (k == -1)
      k = q;
    else if (k != q)
      return false;
  }
  return true;
}

long long vec_content(const DegreeVector& d) {
  long long g = 0;
  for (long long x : d) g = std::gcd(g, x);
  if (g == 0) throw std::invalid_argument("vec_content: zero vector");
  return g;
}

DegreeVector vec_primitive(const DegreeVector& d) {
  long long g = vec_content(d);
  DegreeVector p(d);
  for (long long& x : p) x /= g;
  return p;
}

DegreeVector vec_scale(const DegreeVector& d, long long k) {
  DegreeVector s(d);
  for (long long& x : s) x *= k;
  return s;
}

DegreeVector vec_lcm(const DegreeVector& d, const DegreeVector& e) {
  if (d.size() != e.size()) throw std::invalid_argument("vec_lcm: size mismatch");
  if (vec_is_zero(d) || vec_is_zero(e)) throw std::invalid_argument("vec_lcm: zero argument");
  DegreeVector pd = vec_primitive(d), pe = vec_primitive(e);
  if (pd != pe) return DegreeVector(d.size(), 0);  // non-parallel: no common multiple
  long long kd = vec_content(d), ke = vec_content(e);
  return vec_scale(pd, std::lcm(kd, ke));
}

std::string vec_to_string(const DegreeVector& d) {
  if (d.size() == 1) return std::to_string(d[0]);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) os << ',';
    os << d[i];
  }
  os << ')';
  return os.str();
}

}  // namespace udenom
