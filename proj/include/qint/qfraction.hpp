#pragma once

#include "qint/fracpoly.hpp"

#include <string>

namespace qint {

/// A formal ratio of two FracPoly values. No reduced normal form is kept:
/// equality is extensional, A/B == C/D iff A*D = C*B as polynomials. The
/// denominator is never the zero polynomial.
class QFraction {
 public:
  QFraction() : num_(), den_(FracPoly::constant(Rational(1))) {}
  QFraction(FracPoly num, FracPoly den);

  static QFraction from_poly(FracPoly p);

  const FracPoly& num() const { return num_; }
  const FracPoly& den() const { return den_; }

 private:
  FracPoly num_;
  FracPoly den_;
};

/// Cross-multiplication equality.
bool operator==(const QFraction& f, const QFraction& g);
inline bool operator!=(const QFraction& f, const QFraction& g) { return !(f == g); }

QFraction operator+(const QFraction& f, const QFraction& g);
QFraction operator*(const QFraction& f, const QFraction& g);
QFraction operator-(const QFraction& f);

/// q -> q^r on numerator and denominator. r != 0.
QFraction substitute(const QFraction& f, const Rational& r);

/// (c*q^e * num) / den.
QFraction times_monomial(const QFraction& f, const Rational& e, const Rational& c);

/// Renders the numerator alone when the denominator is the constant 1,
/// otherwise "(num)/(den)".
std::string to_string(const QFraction& f);

}  // namespace qint
