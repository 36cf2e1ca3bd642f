#include "qint/funceq.hpp"

#include <stdexcept>
#include <utility>

namespace qint {

PolySequence::PolySequence(std::vector<FracPoly> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::invalid_argument("sequence must have at least one entry");
  }
}

const FracPoly& PolySequence::at(long long n) const {
  if (n < 1 || n > size()) {
    throw std::out_of_range("sequence index out of range");
  }
  return entries_[static_cast<std::size_t>(n - 1)];
}

FeVerdict check_afe(const PolySequence& s) {
  FeVerdict v;
  v.equation = "afe";
  const long long N = s.size();
  for (long long m = 1; m < N; ++m) {
    for (long long n = 1; m + n <= N; ++n) {
      FracPoly lhs = s.at(m + n);
      FracPoly rhs = s.at(m) + times_monomial(s.at(n), Rational(m), Rational(1));
      if (lhs != rhs) {
        v.pass = false;
        v.witness = FeWitness{m, n, std::move(lhs), std::move(rhs)};
        return v;
      }
    }
  }
  return v;
}

FeVerdict check_mfe(const PolySequence& s) {
  FeVerdict v;
  v.equation = "mfe";
  const long long N = s.size();
  std::optional<FeWitness> first;
  for (long long m = 1; m <= N; ++m) {
    for (long long n = 1; m * n <= N; ++n) {
      FracPoly lhs = s.at(m * n);
      FracPoly rhs = s.at(m) * substitute(s.at(n), Rational(m));
      if (lhs != rhs) {
        v.pass = false;
        if (m >= 2 && n >= 2) {
          // Preferred witness: the first violation away from the trivial
          // index-1 instances, which fail for every non-solution.
          v.witness = FeWitness{m, n, std::move(lhs), std::move(rhs)};
          return v;
        }
        if (!first) {
          first = FeWitness{m, n, std::move(lhs), std::move(rhs)};
        }
      }
    }
  }
  if (!v.pass) {
    v.witness = std::move(first);
  }
  return v;
}

HExtraction afe_extract_h(const PolySequence& s) {
  HExtraction out;
  out.h = s.at(1);
  for (long long n = 1; n <= s.size(); ++n) {
    if (s.at(n) != out.h * quantum_integer(Int(n))) {
      out.ok = false;
      out.failing_index = n;
      return out;
    }
  }
  return out;
}

PolySequence afe_construct(const FracPoly& h, long long N) {
  if (N < 1) {
    throw std::invalid_argument("sequence length must be >= 1");
  }
  std::vector<FracPoly> entries;
  entries.reserve(static_cast<std::size_t>(N));
  for (long long n = 1; n <= N; ++n) {
    entries.push_back(h * quantum_integer(Int(n)));
  }
  return PolySequence(std::move(entries));
}

Classification classify_joint(const PolySequence& s) {
  Classification c;
  FeVerdict a = check_afe(s);
  if (!a.pass) {
    c.kind = JointKind::NotJoint;
    c.failed = std::move(a);
    return c;
  }
  FeVerdict m = check_mfe(s);
  if (!m.pass) {
    c.kind = JointKind::NotJoint;
    c.failed = std::move(m);
    return c;
  }
  // Both equations hold on the full prefix. The (1,1) multiplicative
  // instance gives f_1 = f_1^2, so f_1 is idempotent: 0 or 1.
  const FracPoly& f1 = s.at(1);
  if (f1.is_zero()) {
    c.kind = JointKind::Zero;
  } else if (f1.is_one()) {
    c.kind = JointKind::Quantum;
  } else {
    throw identity_violation();
  }
  return c;
}

std::string to_string(JointKind k) {
  switch (k) {
    case JointKind::Zero:
      return "ZERO";
    case JointKind::Quantum:
      return "QUANTUM";
    case JointKind::NotJoint:
      return "NOT_A_JOINT_SOLUTION";
  }
  throw std::logic_error("unknown classification");
}

namespace {

void require_positive(const std::vector<long long>& ms) {
  if (ms.empty()) {
    throw std::invalid_argument("tuple must be nonempty");
  }
  for (long long m : ms) {
    if (m < 1) {
      throw std::invalid_argument("tuple entries must be positive");
    }
  }
}

}  // namespace

MultitermVerdict verify_multiterm_sum(const std::vector<long long>& ms) {
  require_positive(ms);
  MultitermVerdict v;
  Int total = 0;
  FracPoly acc;
  for (long long m : ms) {
    acc = acc + times_monomial(quantum_integer(Int(m)), Rational(total), Rational(1));
    total += m;
  }
  v.expected = quantum_integer(total);
  v.actual = std::move(acc);
  v.pass = (v.expected == v.actual);
  return v;
}

MultitermVerdict verify_multiterm_product(const std::vector<long long>& ms) {
  require_positive(ms);
  MultitermVerdict v;
  Int total = 1;
  FracPoly acc = FracPoly::constant(Rational(1));
  for (long long m : ms) {
    acc = acc * substitute(quantum_integer(Int(m)), Rational(total));
    total *= m;
  }
  v.expected = quantum_integer(total);
  v.actual = std::move(acc);
  v.pass = (v.expected == v.actual);
  return v;
}

}  // namespace qint
