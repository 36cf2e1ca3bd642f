#pragma once

#include "qint/quantum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qint {

/// A finite 1-based sequence f_1..f_N of polynomials, N >= 1. Arbitrary
/// entries are allowed; nothing is assumed about which equations hold.
class PolySequence {
 public:
  explicit PolySequence(std::vector<FracPoly> entries);

  long long size() const { return static_cast<long long>(entries_.size()); }
  /// 1-based access, 1 <= n <= size().
  const FracPoly& at(long long n) const;

 private:
  std::vector<FracPoly> entries_;
};

struct FeWitness {
  long long m = 0;
  long long n = 0;
  FracPoly lhs;
  FracPoly rhs;
};

struct FeVerdict {
  bool pass = true;
  std::string equation;  // "afe" or "mfe"
  std::optional<FeWitness> witness;
};

/// Additive functional equation f_{m+n} = f_m + q^m f_n, checked for every
/// pair m,n >= 1 with m+n <= N. On failure the witness is the
/// lexicographically first violating (m, n).
FeVerdict check_afe(const PolySequence& s);

/// Multiplicative functional equation f_{mn}(q) = f_m(q) f_n(q^m), checked
/// for every pair m,n >= 1 with m*n <= N. On failure the witness prefers
/// the lexicographically first violating pair with m,n >= 2, falling back
/// to the overall first violation when only pairs touching index 1 fail.
FeVerdict check_mfe(const PolySequence& s);

struct HExtraction {
  bool ok = true;
  FracPoly h;
  std::optional<long long> failing_index;
};

/// Reads h = f_1 and verifies f_n = h * [n]_q for every n <= N. Succeeds
/// exactly when the sequence is an additive solution; otherwise reports
/// the first index where the product form breaks.
HExtraction afe_extract_h(const PolySequence& s);

/// The converse construction f_n = h * [n]_q for n = 1..N. The result
/// always passes check_afe. N >= 1.
PolySequence afe_construct(const FracPoly& h, long long N);

enum class JointKind {
  Zero,     // f_n = 0 for all n
  Quantum,  // f_n = [n]_q for all n
  NotJoint  // some equation fails; see `failed`
};

struct Classification {
  JointKind kind = JointKind::NotJoint;
  /// Present iff kind == NotJoint: the failing verdict with its witness.
  std::optional<FeVerdict> failed;
};

/// Joint-solution trichotomy: a sequence satisfying both equations is the
/// zero sequence or the quantum integers; anything else yields the first
/// failing equation and pair. Relies on the (1,1) multiplicative instance
/// forcing f_1 = f_1^2, so f_1 is 0 or 1 whenever both checks pass.
Classification classify_joint(const PolySequence& s);

std::string to_string(JointKind k);

struct MultitermVerdict {
  bool pass = true;
  FracPoly expected;  // the single quantum integer
  FracPoly actual;    // the assembled sum or product
};

/// [m_1 + ... + m_r]_q = sum_j q^(m_1+...+m_{j-1}) [m_j]_q, with the empty
/// prefix sum equal to 0. All entries positive; ms nonempty.
MultitermVerdict verify_multiterm_sum(const std::vector<long long>& ms);

/// [m_1 m_2 ... m_r]_q = prod_j [m_j]_{q^(m_1...m_{j-1})}, with the empty
/// prefix product equal to 1. All entries positive; ms nonempty.
MultitermVerdict verify_multiterm_product(const std::vector<long long>& ms);

}  // namespace qint
