#include "qint/quantum.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace qint {

FracPoly quantum_integer(const Int& n) {
  std::vector<Term> terms;
  terms.reserve(abs(n).convert_to<std::size_t>());
  if (n > 0) {
    for (Int i = 0; i < n; ++i) {
      terms.push_back({Rational(i), Rational(1)});
    }
  } else if (n < 0) {
    for (Int i = n; i < 0; ++i) {
      terms.push_back({Rational(i), Rational(-1)});
    }
  }
  return FracPoly::from_sorted_terms(std::move(terms));
}

QuantumNumber QuantumNumber::from_value(const Rational& x) {
  if (is_integer(x)) {
    return QuantumNumber(x, QFraction::from_poly(quantum_integer(numerator(x))));
  }
  FracPoly one = FracPoly::constant(Rational(1));
  FracPoly num = one - FracPoly::monomial(x, Rational(1));
  FracPoly den = one - FracPoly::monomial(Rational(1), Rational(1));
  return QuantumNumber(x, QFraction(std::move(num), std::move(den)));
}

QuantumNumber q_int(const Int& n) {
  return QuantumNumber::from_value(Rational(n));
}

QuantumNumber q_rational(const Int& m, const Int& n) {
  if (n == 0) {
    throw std::domain_error("undefined quantum number");
  }
  return QuantumNumber::from_value(make_rational(m, n));
}

QuantumNumber q_add(const QuantumNumber& a, const QuantumNumber& b) {
  QuantumNumber out = QuantumNumber::from_value(a.value() + b.value());
  // [x]_q + q^x [y]_q must equal [x+y]_q.
  QFraction rhs = a.canonical() + times_monomial(b.canonical(), a.value(), Rational(1));
  if (rhs != out.canonical()) {
    throw identity_violation();
  }
  return out;
}

QuantumNumber q_mul(const QuantumNumber& a, const QuantumNumber& b) {
  QuantumNumber out = QuantumNumber::from_value(a.value() * b.value());
  if (a.value() != 0) {
    // [x]_q * [y]_{q^x} must equal [xy]_q.
    QFraction rhs = a.canonical() * substitute(b.canonical(), a.value());
    if (rhs != out.canonical()) {
      throw identity_violation();
    }
  }
  return out;
}

QuantumNumber q_negate(const QuantumNumber& a) {
  QuantumNumber out = QuantumNumber::from_value(Rational(-a.value()));
  QuantumNumber zero = q_add(a, out);
  if (zero.value() != 0) {
    throw identity_violation();
  }
  // [-x]_q = -q^(-x) [x]_q.
  if (out.canonical() != times_monomial(a.canonical(), Rational(-a.value()), Rational(-1))) {
    throw identity_violation();
  }
  return out;
}

QuantumNumber q_reciprocal(const QuantumNumber& a) {
  if (a.value() == 0) {
    throw std::domain_error("zero has no multiplicative inverse");
  }
  QuantumNumber out = QuantumNumber::from_value(Rational(1) / a.value());
  QuantumNumber one = q_mul(a, out);
  if (one.value() != 1) {
    throw identity_violation();
  }
  return out;
}

Rational limit_at_one(const QuantumNumber& a) {
  const Rational& x = a.value();
  if (is_integer(x)) {
    return evaluate(a.canonical().num(), Rational(1)) /
           evaluate(a.canonical().den(), Rational(1));
  }
  Rational m = evaluate(quantum_integer(numerator(x)), Rational(1));
  Rational n = evaluate(quantum_integer(denominator(x)), Rational(1));
  return m / n;
}

namespace {

bool add_law_holds(const QuantumNumber& a, const QuantumNumber& b, const QuantumNumber& expect) {
  return q_add(a, b).canonical() == expect.canonical();
}

bool mul_law_holds(const QuantumNumber& a, const QuantumNumber& b, const QuantumNumber& expect) {
  return q_mul(a, b).canonical() == expect.canonical();
}

}  // namespace

RingLawReport verify_ring_laws(int bound) {
  if (bound < 1) {
    throw std::invalid_argument("bound must be >= 1");
  }
  RingLawReport report;
  auto record = [&report](const std::string& law, std::initializer_list<Int> ops) {
    report.pass = false;
    report.violations.push_back({law, std::vector<Int>(ops)});
  };

  for (Int m = -bound; m <= bound; ++m) {
    QuantumNumber qm = q_int(m);
    for (Int n = -bound; n <= bound; ++n) {
      QuantumNumber qn = q_int(n);
      if (!add_law_holds(qm, qn, q_int(m + n))) {
        record("addition-isomorphism", {m, n});
      }
      if (!mul_law_holds(qm, qn, q_int(m * n))) {
        record("multiplication-isomorphism", {m, n});
      }
      ++report.pairs_checked;
    }
  }

  // Commutativity, associativity and distributivity on a deterministic
  // sample of triples.
  std::mt19937 rng(0x51ab5eedu);
  std::uniform_int_distribution<int> pick(-bound, bound);
  const int samples = 64;
  for (int i = 0; i < samples; ++i) {
    Int x = pick(rng);
    Int y = pick(rng);
    Int z = pick(rng);
    QuantumNumber a = q_int(x);
    QuantumNumber b = q_int(y);
    QuantumNumber c = q_int(z);
    if (q_add(a, b).canonical() != q_add(b, a).canonical()) {
      record("addition-commutativity", {x, y});
    }
    if (q_mul(a, b).canonical() != q_mul(b, a).canonical()) {
      record("multiplication-commutativity", {x, y});
    }
    if (q_add(q_add(a, b), c).canonical() != q_add(a, q_add(b, c)).canonical()) {
      record("addition-associativity", {x, y, z});
    }
    if (q_mul(q_mul(a, b), c).canonical() != q_mul(a, q_mul(b, c)).canonical()) {
      record("multiplication-associativity", {x, y, z});
    }
    if (q_mul(a, q_add(b, c)).canonical() !=
        q_add(q_mul(a, b), q_mul(a, c)).canonical()) {
      record("distributivity", {x, y, z});
    }
    ++report.triples_checked;
  }
  return report;
}

}  // namespace qint
