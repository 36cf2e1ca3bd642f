#include "qint/rational.hpp"

#include <stdexcept>

namespace qint {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) {
    throw std::domain_error("zero denominator");
  }
  // Division normalizes the sign and reduces; the two-argument rational
  // constructor rejects negative denominators outright.
  Rational r(num);
  r /= Rational(den);
  return r;
}

std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (!is_integer(r)) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

std::optional<Int> nth_root_exact(const Int& x, unsigned n) {
  if (x < 0 || n == 0) {
    throw std::invalid_argument("nth_root_exact: x >= 0 and n >= 1 required");
  }
  if (x == 0 || x == 1 || n == 1) {
    return x;
  }
  // Binary search on the root; the bit length bounds the search window.
  unsigned bits = msb(x) + 1;
  Int lo = 1;
  Int hi = Int(1) << (bits / n + 1);
  while (lo < hi) {
    Int mid = (lo + hi + 1) / 2;
    if (pow(mid, n) <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  if (pow(lo, n) == x) {
    return lo;
  }
  return std::nullopt;
}

Rational pow_rational(const Rational& base, const Int& exp) {
  if (exp == 0) {
    return Rational(1);
  }
  if (base == 0 && exp < 0) {
    throw std::domain_error("pole at zero");
  }
  Int e = abs(exp);
  if (e > 0x7fffffff) {
    throw std::domain_error("exponent too large for exact evaluation");
  }
  unsigned ue = e.convert_to<unsigned>();
  Int n = pow(numerator(base), ue);
  Int d = pow(denominator(base), ue);
  return exp > 0 ? make_rational(n, d) : make_rational(d, n);
}

}  // namespace qint
