#include "qint/setops.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qint {

IntSet IntSet::from_elements(std::vector<long long> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  IntSet s;
  s.elems_ = std::move(elems);
  return s;
}

bool IntSet::contains(long long x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

IntSet interval(long long n) {
  if (n < 1) {
    throw std::domain_error("interval size must be positive");
  }
  std::vector<long long> elems;
  elems.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    elems.push_back(i);
  }
  return IntSet::from_elements(std::move(elems));
}

IntSet dilate(long long m, const IntSet& a) {
  if (m == 0) {
    throw std::domain_error("degenerate dilation");
  }
  std::vector<long long> elems;
  elems.reserve(a.size());
  for (long long x : a.elements()) {
    elems.push_back(m * x);
  }
  return IntSet::from_elements(std::move(elems));
}

IntSet translate(long long m, const IntSet& a) {
  std::vector<long long> elems;
  elems.reserve(a.size());
  for (long long x : a.elements()) {
    elems.push_back(m + x);
  }
  return IntSet::from_elements(std::move(elems));
}

IntSet sumset(const IntSet& a, const IntSet& b) {
  std::vector<long long> elems;
  elems.reserve(a.size() * b.size());
  for (long long x : a.elements()) {
    for (long long y : b.elements()) {
      elems.push_back(x + y);
    }
  }
  return IntSet::from_elements(std::move(elems));
}

IntSet set_union(const IntSet& a, const IntSet& b) {
  std::vector<long long> elems;
  elems.reserve(a.size() + b.size());
  elems.insert(elems.end(), a.elements().begin(), a.elements().end());
  elems.insert(elems.end(), b.elements().begin(), b.elements().end());
  return IntSet::from_elements(std::move(elems));
}

IntSet set_intersection(const IntSet& a, const IntSet& b) {
  std::vector<long long> elems;
  std::set_intersection(a.elements().begin(), a.elements().end(),
                        b.elements().begin(), b.elements().end(),
                        std::back_inserter(elems));
  return IntSet::from_elements(std::move(elems));
}

bool disjoint(const IntSet& a, const IntSet& b) {
  return set_intersection(a, b).empty();
}

DirectSumResult direct_sum_check(const IntSet& a, const IntSet& b) {
  DirectSumResult result;
  // Representations in lexicographic (a, b) order per sum.
  std::map<long long, std::vector<Representation>> reps;
  for (long long x : a.elements()) {
    for (long long y : b.elements()) {
      reps[x + y].push_back({x, y});
    }
  }
  std::vector<long long> elems;
  elems.reserve(reps.size());
  for (const auto& [value, list] : reps) {
    elems.push_back(value);
    if (list.size() > 1 && result.direct) {
      result.direct = false;
      result.element = value;
      result.representations = {list[0], list[1]};
    }
  }
  result.sum = IntSet::from_elements(std::move(elems));
  return result;
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

std::string render_sum(const std::vector<long long>& terms) {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) {
      os << "+";
    }
    os << terms[i];
  }
  return os.str();
}

}  // namespace

DecompositionProof partition_add_r(const std::vector<long long>& ms) {
  require_positive(ms);
  DecompositionProof proof;
  proof.identity = "partition-add";
  long long shift = 0;
  for (long long m : ms) {
    proof.parts.push_back(translate(shift, interval(m)));
    shift += m;
  }
  proof.whole = interval(shift);

  IntSet acc;
  for (std::size_t i = 0; i < proof.parts.size(); ++i) {
    IntSet overlap = set_intersection(acc, proof.parts[i]);
    if (!overlap.empty()) {
      proof.pass = false;
      std::ostringstream os;
      os << "element " << overlap.elements().front()
         << " appears in more than one part";
      proof.witness = os.str();
      return proof;
    }
    acc = set_union(acc, proof.parts[i]);
  }
  if (acc != proof.whole) {
    proof.pass = false;
    proof.witness = "union of parts differs from the target interval";
  }
  return proof;
}

DecompositionProof decompose_mul_r(const std::vector<long long>& ms) {
  require_positive(ms);
  DecompositionProof proof;
  proof.identity = "decompose-mul";
  long long scale = 1;
  for (long long m : ms) {
    proof.parts.push_back(dilate(scale, interval(m)));
    scale *= m;
  }
  proof.whole = interval(scale);

  // Brute force over all r-tuples: every sum must land in the target
  // interval exactly once.
  std::map<long long, std::vector<std::vector<long long>>> reps;
  std::vector<std::size_t> index(proof.parts.size(), 0);
  bool done = false;
  while (!done) {
    long long sum = 0;
    std::vector<long long> tuple;
    tuple.reserve(index.size());
    for (std::size_t i = 0; i < index.size(); ++i) {
      long long v = proof.parts[i].elements()[index[i]];
      tuple.push_back(v);
      sum += v;
    }
    reps[sum].push_back(std::move(tuple));
    done = true;
    for (std::size_t pos = index.size(); pos-- > 0;) {
      if (++index[pos] < proof.parts[pos].size()) {
        done = false;
        break;
      }
      index[pos] = 0;
    }
  }

  std::vector<long long> elems;
  elems.reserve(reps.size());
  for (const auto& [value, list] : reps) {
    elems.push_back(value);
    if (list.size() > 1 && proof.pass) {
      proof.pass = false;
      std::ostringstream os;
      os << value << " = " << render_sum(list[0]) << " = " << render_sum(list[1]);
      proof.witness = os.str();
    }
  }
  if (proof.pass && IntSet::from_elements(std::move(elems)) != proof.whole) {
    proof.pass = false;
    proof.witness = "direct sum differs from the target interval";
  }
  return proof;
}

DecompositionProof partition_add(long long m, long long n) {
  return partition_add_r({m, n});
}

DecompositionProof decompose_mul(long long m, long long n) {
  return decompose_mul_r({m, n});
}

FracPoly genfun(const IntSet& a) {
  std::vector<Term> terms;
  terms.reserve(a.size());
  for (long long x : a.elements()) {
    terms.push_back({Rational(x), Rational(1)});
  }
  return FracPoly::from_terms(std::move(terms));
}

GenfunReport verify_genfun_identities(const IntSet& a, const IntSet& b, long long m) {
  GenfunReport report;
  FracPoly fa = genfun(a);
  FracPoly fb = genfun(b);

  IdentityOutcome dil;
  dil.identity = "dilation";
  dil.pass = (genfun(dilate(m, a)) == substitute(fa, Rational(m)));
  report.outcomes.push_back(dil);

  IdentityOutcome tr;
  tr.identity = "translation";
  tr.pass = (genfun(translate(m, a)) == times_monomial(fa, Rational(m), Rational(1)));
  report.outcomes.push_back(tr);

  IdentityOutcome prod;
  prod.identity = "product";
  DirectSumResult ds = direct_sum_check(a, b);
  if (ds.direct) {
    prod.pass = (genfun(ds.sum) == fa * fb);
  } else {
    prod.applicable = false;
    prod.note = "sumset not direct, product identity not applicable";
  }
  report.outcomes.push_back(prod);

  IdentityOutcome un;
  un.identity = "union";
  if (disjoint(a, b)) {
    un.pass = (genfun(set_union(a, b)) == fa + fb);
  } else {
    un.applicable = false;
    un.note = "sets intersect, union identity not applicable";
  }
  report.outcomes.push_back(un);

  for (const IdentityOutcome& o : report.outcomes) {
    if (o.applicable && !o.pass) {
      report.pass = false;
    }
  }
  return report;
}

std::string to_string(const IntSet& a) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) {
      os << ", ";
    }
    os << a.elements()[i];
  }
  os << "}";
  return os.str();
}

}  // namespace qint
