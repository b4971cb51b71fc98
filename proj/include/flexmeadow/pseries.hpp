#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace flexmeadow {

/// One monomial c*e^q of a finite generalized power series in the
/// distinguished positive infinitesimal e. Both the coefficient and the
/// exponent are exact rationals.
struct PTerm {
  Rational exp;
  Rational coeff;
  friend bool operator==(const PTerm& a, const PTerm& b) {
    return a.exp == b.exp && a.coeff == b.coeff;
  }
};

/// Finite sum of c*e^q monomials. Invariants: exponents strictly increasing,
/// every coefficient nonzero. The empty term list is the zero series.
struct PSeries {
  std::vector<PTerm> terms;

  bool is_zero() const { return terms.empty(); }
  const PTerm& leading() const { return terms.front(); }  // lowest exponent

  friend bool operator==(const PSeries& a, const PSeries& b) {
    return a.terms == b.terms;
  }
};

inline PSeries ps_zero() { return {}; }

inline PSeries ps_monomial(const Rational& coeff, const Rational& exp) {
  if (coeff == 0) return {};
  return PSeries{{PTerm{exp, coeff}}};
}

inline PSeries ps_const(const Rational& c) { return ps_monomial(c, 0); }
inline PSeries ps_one() { return ps_const(1); }

/// Merge two sorted term lists, cancelling coefficients that sum to zero.
inline PSeries ps_add(const PSeries& a, const PSeries& b) {
  PSeries out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    const PTerm& x = a.terms[i];
    const PTerm& y = b.terms[j];
    if (x.exp < y.exp) {
      out.terms.push_back(x);
      ++i;
    } else if (y.exp < x.exp) {
      out.terms.push_back(y);
      ++j;
    } else {
      Rational c = x.coeff + y.coeff;
      if (c != 0) out.terms.push_back(PTerm{x.exp, c});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) out.terms.push_back(b.terms[j]);
  return out;
}

inline PSeries ps_neg(const PSeries& a) {
  PSeries out = a;
  for (PTerm& t : out.terms) t.coeff = -t.coeff;
  return out;
}

inline PSeries ps_sub(const PSeries& a, const PSeries& b) {
  return ps_add(a, ps_neg(b));
}

/// Multiply by the monomial c*e^q.
inline PSeries ps_scale(const PSeries& a, const Rational& c, const Rational& q) {
  if (c == 0) return {};
  PSeries out = a;
  for (PTerm& t : out.terms) {
    t.coeff *= c;
    t.exp += q;
  }
  return out;
}

inline PSeries ps_mul(const PSeries& a, const PSeries& b) {
  std::map<Rational, Rational> acc;
  for (const PTerm& x : a.terms)
    for (const PTerm& y : b.terms) acc[x.exp + y.exp] += x.coeff * y.coeff;
  PSeries out;
  for (const auto& [exp, coeff] : acc)
    if (coeff != 0) out.terms.push_back(PTerm{exp, coeff});
  return out;
}

}  // namespace flexmeadow
