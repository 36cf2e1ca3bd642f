#pragma once

#include "qint/fracpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qint {

/// A finite set of integers, stored strictly sorted with no duplicates.
/// The empty set is allowed.
class IntSet {
 public:
  IntSet() = default;
  /// Sorts and deduplicates.
  static IntSet from_elements(std::vector<long long> elems);

  const std::vector<long long>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(long long x) const;

  friend bool operator==(const IntSet& a, const IntSet& b) {
    return a.elems_ == b.elems_;
  }
  friend bool operator!=(const IntSet& a, const IntSet& b) { return !(a == b); }

 private:
  std::vector<long long> elems_;
};

/// {0, 1, ..., n-1}. n >= 1; smaller intervals are rejected
/// (std::domain_error "interval size must be positive").
IntSet interval(long long n);

/// m*A = {m*a : a in A}. m != 0 so cardinality is preserved; m == 0
/// throws std::domain_error("degenerate dilation").
IntSet dilate(long long m, const IntSet& a);

/// m+A = {m+a : a in A}.
IntSet translate(long long m, const IntSet& a);

/// A+B = {a+b : a in A, b in B}, deduplicated.
IntSet sumset(const IntSet& a, const IntSet& b);

IntSet set_union(const IntSet& a, const IntSet& b);
IntSet set_intersection(const IntSet& a, const IntSet& b);
bool disjoint(const IntSet& a, const IntSet& b);

struct Representation {
  long long a = 0;
  long long b = 0;
};

/// Outcome of the unique-representation test on A+B.
struct DirectSumResult {
  bool direct = true;
  IntSet sum;
  /// When not direct: the smallest doubly-represented element and its two
  /// lexicographically first representations.
  std::optional<long long> element;
  std::vector<Representation> representations;
};

/// Enumerates every pair (a, b) and counts representations of each sum.
/// DIRECT iff every element of A+B has exactly one representation.
DirectSumResult direct_sum_check(const IntSet& a, const IntSet& b);

/// Evidence for one interval partition or decomposition identity: the
/// constructed parts, the target interval, and the verification outcome.
/// The checks are theorems, so `pass` is expected to be true; a false
/// value carries a rendered witness instead of throwing so that callers
/// can report it.
struct DecompositionProof {
  std::string identity;  // "partition-add" or "decompose-mul"
  std::vector<IntSet> parts;
  IntSet whole;
  bool pass = true;
  std::optional<std::string> witness;
};

/// [m+n] = [m] u (m+[n]) with the two parts disjoint. m, n >= 1.
DecompositionProof partition_add(long long m, long long n);

/// [mn] = [m] (+) m*[n], verified by direct_sum_check. m, n >= 1.
DecompositionProof decompose_mul(long long m, long long n);

/// [m_1+...+m_r] = union over j of (m_1+...+m_{j-1}) + [m_j], pairwise
/// disjoint. ms nonempty, all entries positive.
DecompositionProof partition_add_r(const std::vector<long long>& ms);

/// [m_1 m_2 ... m_r] = iterated direct sum of (m_1...m_{j-1}) * [m_j],
/// verified by brute force over all r-tuples: every element of the target
/// interval must arise from exactly one tuple. ms nonempty, entries positive.
DecompositionProof decompose_mul_r(const std::vector<long long>& ms);

/// F_A(q) = sum over a in A of q^a.
FracPoly genfun(const IntSet& a);

struct IdentityOutcome {
  std::string identity;  // "dilation", "translation", "product", "union"
  bool applicable = true;
  bool pass = true;  // meaningful only when applicable
  std::string note;  // set when an identity's precondition fails
};

struct GenfunReport {
  bool pass = true;  // every applicable identity held
  std::vector<IdentityOutcome> outcomes;
};

/// Checks the four generating-function homomorphism identities:
///   F_{m*A}(q) = F_A(q^m)        (dilation; m != 0)
///   F_{m+A}(q) = q^m F_A(q)      (translation)
///   F_{A(+)B}(q) = F_A(q)F_B(q)  (product; only when A+B is direct)
///   F_{AuB}(q) = F_A(q)+F_B(q)   (union; only when A and B are disjoint)
/// Inapplicable identities are reported with a note, not failed.
GenfunReport verify_genfun_identities(const IntSet& a, const IntSet& b, long long m);

/// Sorted comma list in braces: "{0, 3, 6, 9}"; the empty set is "{}".
std::string to_string(const IntSet& a);

}  // namespace qint
