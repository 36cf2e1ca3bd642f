#pragma once

#include "qint/rational.hpp"

#include <string>
#include <vector>

namespace qint {

struct Term {
  Rational exponent;
  Rational coefficient;
};

/// A finite polynomial in q with rational coefficients and rational
/// exponents (negative and fractional exponents allowed). Terms are kept
/// strictly sorted by exponent with no zero coefficients, so two equal
/// polynomials always hold identical term sequences and operator== is a
/// plain sequence compare. The zero polynomial is the empty sequence.
class FracPoly {
 public:
  FracPoly() = default;

  static FracPoly constant(const Rational& c);
  static FracPoly monomial(const Rational& exponent, const Rational& coefficient);
  // Normalizes an arbitrary term list: sorts, merges equal exponents,
  // drops zero coefficients.
  static FracPoly from_terms(std::vector<Term> terms);
  // Trusted fast path: the terms must already be strictly increasing in
  // exponent with no zero coefficients (checked by assertions in debug
  // builds). Violating the precondition corrupts the invariant.
  static FracPoly from_sorted_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }

  friend bool operator==(const FracPoly& a, const FracPoly& b);
  friend bool operator!=(const FracPoly& a, const FracPoly& b) { return !(a == b); }

 private:
  std::vector<Term> terms_;
  friend FracPoly operator+(const FracPoly&, const FracPoly&);
  friend FracPoly operator-(const FracPoly&);
  friend FracPoly operator*(const FracPoly&, const FracPoly&);
  friend FracPoly substitute(const FracPoly&, const Rational&);
  friend FracPoly times_monomial(const FracPoly&, const Rational&, const Rational&);
};

FracPoly operator+(const FracPoly& a, const FracPoly& b);
FracPoly operator-(const FracPoly& a, const FracPoly& b);
FracPoly operator-(const FracPoly& a);
FracPoly operator*(const FracPoly& a, const FracPoly& b);

/// The map q -> q^r: every exponent is scaled by r. r must be nonzero
/// (q -> q^0 would collapse all terms); throws std::domain_error.
FracPoly substitute(const FracPoly& a, const Rational& r);

/// Multiplies by the monomial c*q^e: shifts every exponent by e and scales
/// every coefficient by c. c == 0 yields the zero polynomial.
FracPoly times_monomial(const FracPoly& a, const Rational& e, const Rational& c);

/// Exact evaluation at v. Requirements: v > 0 when any exponent is
/// non-integral, v != 0 when any exponent is negative ("pole at zero"),
/// and for an exponent with denominator d the d-th root of v must be
/// rational ("inexact evaluation"). Throws std::domain_error otherwise.
Rational evaluate(const FracPoly& a, const Rational& v);

/// Canonical text form: nonnegative exponents in increasing order, then
/// negative exponents outward from q^(-1); coefficient 1 elided,
/// nonnegative integer exponents bare (q^2), all other exponents
/// parenthesized (q^(-1), q^(1/2)). Examples: "1 + q + q^2",
/// "-q^(-1) - q^(-2)", "1 - q^(1/2)", "3/2*q^(1/3)". Zero renders as "0".
std::string to_string(const FracPoly& a);

}  // namespace qint
