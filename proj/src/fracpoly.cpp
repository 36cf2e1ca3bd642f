#include "qint/fracpoly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace qint {

namespace {

// Hot-path arithmetic on Rational. A cpp_rational is always stored reduced
// with a positive denominator, so equality is component-wise, and
// denominator-1 values (the overwhelmingly common case for exponents and
// coefficients) add, multiply, and compare as plain integers instead of
// running the generic normalization machinery.
inline bool is_int_pair(const Rational& a, const Rational& b) {
  return denominator(a) == 1 && denominator(b) == 1;
}

inline Rational add_rat(const Rational& a, const Rational& b) {
  if (is_int_pair(a, b)) {
    return Rational(numerator(a) + numerator(b));
  }
  return a + b;
}

inline Rational mul_rat(const Rational& a, const Rational& b) {
  if (is_int_pair(a, b)) {
    return Rational(numerator(a) * numerator(b));
  }
  return a * b;
}

inline bool less_rat(const Rational& a, const Rational& b) {
  if (is_int_pair(a, b)) {
    return numerator(a) < numerator(b);
  }
  return a < b;
}

inline bool equal_rat(const Rational& a, const Rational& b) {
  return numerator(a) == numerator(b) && denominator(a) == denominator(b);
}

}  // namespace

FracPoly FracPoly::constant(const Rational& c) {
  return monomial(Rational(0), c);
}

FracPoly FracPoly::monomial(const Rational& exponent, const Rational& coefficient) {
  FracPoly p;
  if (coefficient != 0) {
    p.terms_.push_back({exponent, coefficient});
  }
  return p;
}

FracPoly FracPoly::from_terms(std::vector<Term> terms) {
  auto by_exponent = [](const Term& a, const Term& b) {
    return less_rat(a.exponent, b.exponent);
  };
  if (!std::is_sorted(terms.begin(), terms.end(), by_exponent)) {
    std::sort(terms.begin(), terms.end(), by_exponent);
  }
  FracPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && equal_rat(p.terms_.back().exponent, t.exponent)) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient == 0) {
        p.terms_.pop_back();
      }
    } else if (t.coefficient != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

FracPoly FracPoly::from_sorted_terms(std::vector<Term> terms) {
#ifndef NDEBUG
  for (std::size_t i = 0; i < terms.size(); ++i) {
    assert(terms[i].coefficient != 0);
    assert(i == 0 || terms[i - 1].exponent < terms[i].exponent);
  }
#endif
  FracPoly p;
  p.terms_ = std::move(terms);
  return p;
}

bool FracPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exponent == 0 && terms_[0].coefficient == 1;
}

bool operator==(const FracPoly& a, const FracPoly& b) {
  if (a.terms_.size() != b.terms_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!equal_rat(a.terms_[i].exponent, b.terms_[i].exponent) ||
        !equal_rat(a.terms_[i].coefficient, b.terms_[i].coefficient)) {
      return false;
    }
  }
  return true;
}

FracPoly operator+(const FracPoly& a, const FracPoly& b) {
  FracPoly out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    const Term& ta = a.terms_[i];
    const Term& tb = b.terms_[j];
    if (less_rat(ta.exponent, tb.exponent)) {
      out.terms_.push_back(ta);
      ++i;
    } else if (less_rat(tb.exponent, ta.exponent)) {
      out.terms_.push_back(tb);
      ++j;
    } else {
      Rational c = add_rat(ta.coefficient, tb.coefficient);
      if (c != 0) {
        out.terms_.push_back({ta.exponent, std::move(c)});
      }
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) out.terms_.push_back(b.terms_[j]);
  return out;
}

FracPoly operator-(const FracPoly& a) {
  FracPoly out = a;
  for (auto& t : out.terms_) {
    t.coefficient = -t.coefficient;
  }
  return out;
}

FracPoly operator-(const FracPoly& a, const FracPoly& b) {
  return a + (-b);
}

FracPoly operator*(const FracPoly& a, const FracPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  // A single-term factor shifts and scales without disturbing the order.
  if (b.terms_.size() == 1) {
    return times_monomial(a, b.terms_[0].exponent, b.terms_[0].coefficient);
  }
  if (a.terms_.size() == 1) {
    return times_monomial(b, a.terms_[0].exponent, a.terms_[0].coefficient);
  }
  // One shifted copy of `a` per term of `b`. Each copy is internally sorted,
  // so when consecutive copies stay disjoint (block-structured products such
  // as [m]_q * [n]_{q^m} always do) the result is already canonical and the
  // normalization sort is skipped. Overlap falls back to full normalization.
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  bool sorted = true;
  for (const Term& tb : b.terms_) {
    const std::size_t run_start = prod.size();
    for (const Term& ta : a.terms_) {
      prod.push_back(
          {add_rat(ta.exponent, tb.exponent), mul_rat(ta.coefficient, tb.coefficient)});
    }
    if (sorted && run_start > 0 &&
        !less_rat(prod[run_start - 1].exponent, prod[run_start].exponent)) {
      sorted = false;
    }
  }
  if (sorted) {
    return FracPoly::from_sorted_terms(std::move(prod));
  }
  return FracPoly::from_terms(std::move(prod));
}

FracPoly substitute(const FracPoly& a, const Rational& r) {
  if (r == 0) {
    throw std::domain_error("substitution exponent must be nonzero");
  }
  FracPoly out;
  out.terms_.reserve(a.terms_.size());
  for (const Term& t : a.terms_) {
    out.terms_.push_back({mul_rat(t.exponent, r), t.coefficient});
  }
  // e -> e*r is strictly monotone; r < 0 reverses the order.
  if (r < 0) {
    std::reverse(out.terms_.begin(), out.terms_.end());
  }
  return out;
}

FracPoly times_monomial(const FracPoly& a, const Rational& e, const Rational& c) {
  if (c == 0) {
    return {};
  }
  FracPoly out;
  out.terms_.reserve(a.terms_.size());
  for (const Term& t : a.terms_) {
    out.terms_.push_back({add_rat(t.exponent, e), mul_rat(t.coefficient, c)});
  }
  return out;
}

namespace {

// v^(a/b) as an exact rational, with the evaluation rules documented on
// evaluate().
Rational power_exact(const Rational& v, const Rational& e) {
  const Int& a = numerator(e);
  const Int& b = denominator(e);
  if (b == 1) {
    return pow_rational(v, a);
  }
  if (v <= 0) {
    throw std::domain_error("fractional exponent requires a positive base");
  }
  if (b > 0x7fffffff) {
    throw std::domain_error("inexact evaluation");
  }
  unsigned ub = b.convert_to<unsigned>();
  auto root_num = nth_root_exact(numerator(v), ub);
  auto root_den = nth_root_exact(denominator(v), ub);
  if (!root_num || !root_den) {
    throw std::domain_error("inexact evaluation");
  }
  return pow_rational(make_rational(*root_num, *root_den), a);
}

std::string exponent_string(const Rational& e) {
  if (is_integer(e) && e >= 0) {
    return numerator(e).str();
  }
  return "(" + to_string(e) + ")";
}

}  // namespace

Rational evaluate(const FracPoly& a, const Rational& v) {
  Rational sum(0);
  for (const Term& t : a.terms()) {
    sum += t.coefficient * power_exact(v, t.exponent);
  }
  return sum;
}

std::string to_string(const FracPoly& a) {
  if (a.is_zero()) {
    return "0";
  }
  // Display order: nonnegative exponents ascending, then negative
  // exponents outward from q^(-1), matching how quantum integers are
  // customarily written ("1 + q + q^2", "-q^(-1) - q^(-2)").
  std::vector<const Term*> display;
  display.reserve(a.terms().size());
  const auto& ts = a.terms();
  std::size_t split = 0;
  while (split < ts.size() && ts[split].exponent < 0) {
    ++split;
  }
  for (std::size_t i = split; i < ts.size(); ++i) {
    display.push_back(&ts[i]);
  }
  for (std::size_t i = split; i-- > 0;) {
    display.push_back(&ts[i]);
  }
  std::string out;
  bool first = true;
  for (const Term* tp : display) {
    const Term& t = *tp;
    const bool negative = t.coefficient < 0;
    Rational mag = negative ? Rational(-t.coefficient) : t.coefficient;
    std::string body;
    if (t.exponent == 0) {
      body = to_string(mag);
    } else {
      if (mag != 1) {
        body = to_string(mag) + "*";
      }
      if (t.exponent == 1) {
        body += "q";
      } else {
        body += "q^" + exponent_string(t.exponent);
      }
    }
    if (first) {
      out = (negative ? "-" : "") + body;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace qint
