#include "qint/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace qint;

TEST_CASE("make_rational reduces and normalizes the sign") {
  CHECK(make_rational(4, -6) == make_rational(-2, 3));
  CHECK(numerator(make_rational(4, -6)) == -2);
  CHECK(denominator(make_rational(4, -6)) == 3);
  CHECK(make_rational(0, 5) == 0);
  CHECK(make_rational(7, 7) == 1);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("is_integer and to_string") {
  CHECK(is_integer(Rational(4)));
  CHECK(is_integer(make_rational(8, 2)));
  CHECK_FALSE(is_integer(make_rational(1, 2)));
  CHECK(to_string(Rational(-3)) == "-3");
  CHECK(to_string(make_rational(4, -6)) == "-2/3");
  CHECK(to_string(make_rational(5, 2)) == "5/2");
  CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("nth_root_exact finds exact roots and rejects inexact ones") {
  CHECK(nth_root_exact(8, 3) == Int(2));
  CHECK(nth_root_exact(16, 4) == Int(2));
  CHECK(nth_root_exact(49, 2) == Int(7));
  CHECK(nth_root_exact(0, 5) == Int(0));
  CHECK(nth_root_exact(1, 9) == Int(1));
  CHECK_FALSE(nth_root_exact(10, 2).has_value());
  CHECK_FALSE(nth_root_exact(26, 3).has_value());
  CHECK(nth_root_exact(Int(1) << 60, 2) == (Int(1) << 30));
  CHECK_THROWS_AS(nth_root_exact(-4, 2), std::invalid_argument);
  CHECK_THROWS_AS(nth_root_exact(4, 0), std::invalid_argument);
}

TEST_CASE("pow_rational handles negative exponents and poles") {
  CHECK(pow_rational(make_rational(2, 3), 2) == make_rational(4, 9));
  CHECK(pow_rational(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK(pow_rational(Rational(5), 0) == 1);
  CHECK(pow_rational(Rational(0), 3) == 0);
  CHECK(pow_rational(Rational(-2), 3) == -8);
  CHECK(pow_rational(make_rational(-1, 2), -2) == 4);
  CHECK_THROWS_AS(pow_rational(Rational(0), -1), std::domain_error);
}
