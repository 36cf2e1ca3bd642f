#pragma once

// Independent reference implementations used to cross-check the kernel:
// map-based polynomial arithmetic and brute-force representation counting,
// kept deliberately naive so that agreement is meaningful evidence.

#include "qint/fracpoly.hpp"

#include <map>
#include <random>
#include <vector>

namespace oracle {

using qint::FracPoly;
using qint::Rational;

using Poly = std::map<Rational, Rational>;  // exponent -> coefficient

inline Poly trimmed(Poly m) {
  for (auto it = m.begin(); it != m.end();) {
    it = (it->second == 0) ? m.erase(it) : std::next(it);
  }
  return m;
}

inline Poly to_map(const FracPoly& p) {
  Poly m;
  for (const qint::Term& t : p.terms()) {
    m[t.exponent] = t.coefficient;
  }
  return m;
}

inline bool same(const Poly& m, const FracPoly& p) {
  return trimmed(m) == to_map(p);
}

inline Poly add(Poly a, const Poly& b) {
  for (const auto& [e, c] : b) {
    a[e] += c;
  }
  return trimmed(std::move(a));
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      out[ea + eb] += ca * cb;
    }
  }
  return trimmed(std::move(out));
}

// The quantum integer written out directly from its definition.
inline Poly qint_poly(long long n) {
  Poly out;
  for (long long i = 0; i < n; ++i) {
    out[Rational(i)] = 1;
  }
  for (long long i = n; i < 0; ++i) {
    out[Rational(i)] = -1;
  }
  return out;
}

inline std::map<long long, long long> rep_counts(const std::vector<long long>& a,
                                                 const std::vector<long long>& b) {
  std::map<long long, long long> counts;
  for (long long x : a) {
    for (long long y : b) {
      ++counts[x + y];
    }
  }
  return counts;
}

// Random polynomial with at most 6 terms and small coefficients. With
// `fractional` set, exponents are num/den with |num| <= 10 and den <= 4
// (so every degree stays within 10); otherwise integer exponents in
// [-6, 6].
inline FracPoly random_poly(std::mt19937& rng, bool fractional) {
  std::uniform_int_distribution<int> n_terms(1, 6);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> num(-10, 10);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<qint::Term> ts;
  const int k = n_terms(rng);
  for (int i = 0; i < k; ++i) {
    int c = coef(rng);
    if (c == 0) {
      c = 1;
    }
    Rational e = fractional ? qint::make_rational(num(rng), den(rng))
                            : Rational(num(rng) % 7);
    ts.push_back({e, Rational(c)});
  }
  return FracPoly::from_terms(std::move(ts));
}

}  // namespace oracle
