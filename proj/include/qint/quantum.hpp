#pragma once

#include "qint/qfraction.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qint {

/// Thrown when one of the built-in identity checks inside a quantum
/// operation fails. This indicates a kernel bug and must never occur.
struct identity_violation : std::logic_error {
  identity_violation() : std::logic_error("identity violation") {}
};

/// The quantum integer [n]_q as a polynomial: 1 + q + ... + q^(n-1) for
/// n > 0, the zero polynomial for n = 0, and -(q^-1 + ... + q^-|n|) for
/// n < 0.
FracPoly quantum_integer(const Int& n);

/// A rational value x together with the canonical representation of
/// [x]_q = (1 - q^x)/(1 - q). Integer x is stored in expanded polynomial
/// form over 1; non-integer x keeps the two-term ratio. Both forms are
/// extensionally equal as QFractions.
class QuantumNumber {
 public:
  const Rational& value() const { return value_; }
  const QFraction& canonical() const { return canonical_; }

  /// [x]_q for any rational x.
  static QuantumNumber from_value(const Rational& x);

 private:
  QuantumNumber(Rational value, QFraction canonical)
      : value_(std::move(value)), canonical_(std::move(canonical)) {}

  Rational value_;
  QFraction canonical_;
};

/// [n]_q for any integer n.
QuantumNumber q_int(const Int& n);

/// [m/n]_q, reduced to lowest terms. Throws std::domain_error
/// ("undefined quantum number") when n == 0.
QuantumNumber q_rational(const Int& m, const Int& n);

/// Quantum addition: returns [x+y]_q and verifies the defining identity
/// [x]_q + q^x [y]_q = [x+y]_q by cross-multiplication. Throws
/// identity_violation if the check fails.
QuantumNumber q_add(const QuantumNumber& a, const QuantumNumber& b);

/// Quantum multiplication: returns [x*y]_q and verifies
/// [x]_q * [y]_{q^x} = [xy]_q. The x = 0 case short-circuits to [0]
/// (the substitution q -> q^0 is degenerate and is not attempted).
QuantumNumber q_mul(const QuantumNumber& a, const QuantumNumber& b);

/// [-x]_q; verifies both [x] (+) [-x] = [0] and
/// canonical([-x]) = -q^(-x) * canonical([x]).
QuantumNumber q_negate(const QuantumNumber& a);

/// [1/x]_q; verifies [x] (*) [1/x] = [1]. Throws std::domain_error
/// ("zero has no multiplicative inverse") when x == 0.
QuantumNumber q_reciprocal(const QuantumNumber& a);

/// lim_{q->1} [x]_q, computed by exact evaluation: integer values
/// evaluate the canonical polynomial at q = 1; for x = m/n the
/// polynomials [m]_t and [n]_t are evaluated at t = 1 and their ratio is
/// returned.
Rational limit_at_one(const QuantumNumber& a);

struct RingLawViolation {
  std::string law;
  std::vector<Int> operands;
};

struct RingLawReport {
  bool pass = true;
  long long pairs_checked = 0;
  long long triples_checked = 0;
  std::vector<RingLawViolation> violations;
};

/// Checks, for all integers |m|,|n| <= bound, that quantum addition and
/// multiplication land on [m+n]_q and [m*n]_q, and checks commutativity,
/// associativity and distributivity on a fixed deterministic sample of
/// triples. Violations are reported, not thrown. bound >= 1.
RingLawReport verify_ring_laws(int bound);

}  // namespace qint
