#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace qint {

// Arbitrary-precision integers and rationals. A Rational is always stored
// reduced, with a positive denominator; boost maintains both invariants
// through every operation.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num/den as a reduced rational. Throws std::domain_error when den == 0.
Rational make_rational(const Int& num, const Int& den);

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// "m" for integers, "m/n" otherwise, both parts in decimal.
std::string to_string(const Rational& r);

// Exact n-th root of a nonnegative integer, or nullopt when x is not a
// perfect n-th power. n >= 1.
std::optional<Int> nth_root_exact(const Int& x, unsigned n);

// base^exp for an integer exponent. base must be nonzero when exp < 0.
Rational pow_rational(const Rational& base, const Int& exp);

}  // namespace qint
