#include "qint/quantum.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace qint;

namespace {

Rational R(long long n, long long d = 1) { return make_rational(Int(n), Int(d)); }

FracPoly P(std::vector<Term> ts) { return FracPoly::from_terms(std::move(ts)); }

}  // namespace

TEST_CASE("quantum_integer expands the defining sum") {
  CHECK(quantum_integer(3) == P({{R(0), R(1)}, {R(1), R(1)}, {R(2), R(1)}}));
  CHECK(quantum_integer(1).is_one());
  CHECK(quantum_integer(0).is_zero());
  CHECK(quantum_integer(-2) == P({{R(-2), R(-1)}, {R(-1), R(-1)}}));
  for (long long n = -8; n <= 8; ++n) {
    CHECK(oracle::same(oracle::qint_poly(n), quantum_integer(n)));
  }
}

TEST_CASE("the three forms of a negative quantum integer coincide") {
  for (long long n = 1; n <= 10; ++n) {
    FracPoly direct = quantum_integer(-n);
    FracPoly shifted = times_monomial(quantum_integer(n), R(-n), R(-1));
    FracPoly reflected =
        times_monomial(substitute(quantum_integer(n), R(-1)), R(-1), R(-1));
    CHECK(direct == shifted);
    CHECK(shifted == reflected);
  }
}

TEST_CASE("q_int stores the expanded polynomial over 1") {
  QuantumNumber three = q_int(3);
  CHECK(three.value() == 3);
  CHECK(three.canonical().den().is_one());
  CHECK(to_string(three.canonical()) == "1 + q + q^2");
  CHECK(q_int(0).canonical().num().is_zero());
  CHECK(to_string(q_int(-2).canonical()) == "-q^(-1) - q^(-2)");
}

TEST_CASE("q_rational reduces and keeps the two-term ratio") {
  QuantumNumber half = q_rational(1, 2);
  CHECK(half.value() == R(1, 2));
  CHECK(to_string(half.canonical()) == "(1 - q^(1/2))/(1 - q)");

  CHECK(q_rational(4, 2).value() == 2);
  CHECK(q_rational(4, 2).canonical() == q_int(2).canonical());
  CHECK(q_rational(0, 5).value() == 0);
  CHECK(q_rational(2, 4).value() == q_rational(1, 2).value());
  CHECK(q_rational(2, 4).canonical() == q_rational(1, 2).canonical());
  CHECK(q_rational(-3, -6).value() == R(1, 2));
  CHECK_THROWS_WITH_AS(q_rational(1, 0), "undefined quantum number", std::domain_error);
}

TEST_CASE("quantum addition lands on the sum") {
  QuantumNumber five = q_add(q_int(2), q_int(3));
  CHECK(five.value() == 5);
  CHECK(five.canonical() == q_int(5).canonical());

  QuantumNumber one = q_add(q_rational(1, 2), q_rational(1, 2));
  CHECK(one.value() == 1);
  CHECK(one.canonical() == q_int(1).canonical());

  QuantumNumber mixed = q_add(q_int(2), q_rational(1, 2));
  CHECK(mixed.value() == R(5, 2));
}

TEST_CASE("quantum multiplication lands on the product") {
  QuantumNumber six = q_mul(q_int(2), q_int(3));
  CHECK(six.value() == 6);
  CHECK(six.canonical() == q_int(6).canonical());
  // (1 + q) * (1 + q^2 + q^4) spelled out.
  FracPoly lhs = quantum_integer(2) * substitute(quantum_integer(3), R(2));
  CHECK(lhs == quantum_integer(6));

  QuantumNumber neg = q_mul(q_int(-1), q_int(2));
  CHECK(neg.value() == -2);
  CHECK(neg.canonical() == q_int(-2).canonical());

  CHECK(q_mul(q_int(0), q_rational(1, 2)).value() == 0);
  CHECK(q_mul(q_rational(1, 2), q_int(0)).value() == 0);
  CHECK(q_mul(q_rational(1, 2), q_rational(2, 3)).value() == R(1, 3));
}

TEST_CASE("additive inverses negate the index") {
  QuantumNumber neg = q_negate(q_int(2));
  CHECK(neg.value() == -2);
  CHECK(to_string(neg.canonical()) == "-q^(-1) - q^(-2)");
  CHECK(q_add(q_int(2), neg).value() == 0);

  QuantumNumber nhalf = q_negate(q_rational(1, 2));
  CHECK(nhalf.value() == R(-1, 2));
  CHECK(q_add(q_rational(1, 2), nhalf).value() == 0);
  CHECK(q_negate(q_int(0)).value() == 0);
}

TEST_CASE("multiplicative inverses invert the index") {
  QuantumNumber half = q_reciprocal(q_int(2));
  CHECK(half.value() == R(1, 2));
  CHECK(half.canonical() == q_rational(1, 2).canonical());

  QuantumNumber inv = q_reciprocal(q_rational(2, 3));
  CHECK(inv.value() == R(3, 2));
  CHECK(q_mul(q_rational(2, 3), inv).value() == 1);

  CHECK_THROWS_WITH_AS(q_reciprocal(q_int(0)), "zero has no multiplicative inverse",
                       std::domain_error);
}

TEST_CASE("the limit at q = 1 recovers the index") {
  CHECK(limit_at_one(q_int(3)) == 3);
  CHECK(limit_at_one(q_int(0)) == 0);
  CHECK(limit_at_one(q_int(-2)) == -2);
  CHECK(limit_at_one(q_rational(1, 2)) == R(1, 2));
  CHECK(limit_at_one(q_rational(-3, 2)) == R(-3, 2));
}

TEST_CASE("the ring laws hold on a desk-scale sweep") {
  RingLawReport r = verify_ring_laws(5);
  CHECK(r.pass);
  CHECK(r.pairs_checked == 121);
  CHECK(r.triples_checked == 64);
  CHECK(r.violations.empty());

  RingLawReport tiny = verify_ring_laws(1);
  CHECK(tiny.pass);
  CHECK(tiny.pairs_checked == 9);

  CHECK_THROWS_AS(verify_ring_laws(0), std::invalid_argument);
}
