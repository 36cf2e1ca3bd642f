#include "qint/qfraction.hpp"

#include <stdexcept>
#include <utility>

namespace qint {

QFraction::QFraction(FracPoly num, FracPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw std::domain_error("zero denominator");
  }
}

QFraction QFraction::from_poly(FracPoly p) {
  return QFraction(std::move(p), FracPoly::constant(Rational(1)));
}

bool operator==(const QFraction& f, const QFraction& g) {
  // Equal nonzero denominators reduce cross-multiplication to a numerator
  // compare (FracPoly is an integral domain).
  if (f.den() == g.den()) {
    return f.num() == g.num();
  }
  return f.num() * g.den() == g.num() * f.den();
}

QFraction operator+(const QFraction& f, const QFraction& g) {
  return QFraction(f.num() * g.den() + g.num() * f.den(), f.den() * g.den());
}

QFraction operator*(const QFraction& f, const QFraction& g) {
  return QFraction(f.num() * g.num(), f.den() * g.den());
}

QFraction operator-(const QFraction& f) {
  return QFraction(-f.num(), f.den());
}

QFraction substitute(const QFraction& f, const Rational& r) {
  return QFraction(substitute(f.num(), r), substitute(f.den(), r));
}

QFraction times_monomial(const QFraction& f, const Rational& e, const Rational& c) {
  return QFraction(times_monomial(f.num(), e, c), f.den());
}

std::string to_string(const QFraction& f) {
  if (f.den().is_one()) {
    return to_string(f.num());
  }
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace qint
