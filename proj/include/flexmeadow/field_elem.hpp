#pragma once

#include <compare>

#include "pseries.hpp"

namespace flexmeadow {

/// Valuation of a field element: the leading exponent of its series
/// expansion, with a dedicated +infinity value for zero that compares above
/// every finite valuation.
struct Valuation {
  bool infinite = false;
  Rational value = 0;  // meaningful only when !infinite

  static Valuation of(const Rational& q) { return Valuation{false, q}; }
  static Valuation plus_infinity() { return Valuation{true, 0}; }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.value == b.value;
  }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
  friend bool operator<=(const Valuation& a, const Valuation& b) {
    return a < b || a == b;
  }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return b <= a; }

  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite || b.infinite) return plus_infinity();
    return of(a.value + b.value);
  }
};

/// Element of the fraction field of finite generalized power series in e.
/// Invariants: den is nonzero and normalized so that its leading
/// (lowest-exponent) term is 1*e^0; a zero numerator is stored as 0/1.
/// Equality is by exact cross-multiplication, never by truncation.
class FieldElem {
 public:
  PSeries num;
  PSeries den;

  FieldElem() : num(), den(ps_one()) {}

  static FieldElem make(PSeries n, PSeries d) {
    if (d.is_zero()) throw DivisionByZero();
    if (n.is_zero()) return FieldElem();
    const PTerm lead = d.leading();
    Rational inv_c = Rational(1) / lead.coeff;
    Rational neg_q = -lead.exp;
    FieldElem x;
    x.num = ps_scale(n, inv_c, neg_q);
    x.den = ps_scale(d, inv_c, neg_q);
    return x;
  }

  bool is_zero() const { return num.is_zero(); }
};

inline FieldElem fe_from_series(PSeries p) {
  return FieldElem::make(std::move(p), ps_one());
}
inline FieldElem fe_const(const Rational& c) { return fe_from_series(ps_const(c)); }
inline FieldElem fe_zero() { return FieldElem(); }
inline FieldElem fe_one() { return fe_const(1); }
/// The monomial e^q.
inline FieldElem fe_eps_pow(const Rational& q) {
  return fe_from_series(ps_monomial(1, q));
}
inline FieldElem fe_eps() { return fe_eps_pow(1); }

inline FieldElem f_add(const FieldElem& x, const FieldElem& y) {
  return FieldElem::make(
      ps_add(ps_mul(x.num, y.den), ps_mul(y.num, x.den)),
      ps_mul(x.den, y.den));
}

inline FieldElem f_neg(const FieldElem& x) {
  FieldElem out = x;
  out.num = ps_neg(out.num);
  return out;
}

inline FieldElem f_sub(const FieldElem& x, const FieldElem& y) {
  return f_add(x, f_neg(y));
}

inline FieldElem f_mul(const FieldElem& x, const FieldElem& y) {
  return FieldElem::make(ps_mul(x.num, y.num), ps_mul(x.den, y.den));
}

/// Exact inverse by swapping numerator and denominator. Throws
/// DivisionByZero when x = 0.
inline FieldElem f_inv(const FieldElem& x) {
  if (x.is_zero()) throw DivisionByZero();
  return FieldElem::make(x.den, x.num);
}

inline FieldElem f_div(const FieldElem& x, const FieldElem& y) {
  return f_mul(x, f_inv(y));
}

inline bool f_eq(const FieldElem& x, const FieldElem& y) {
  return ps_mul(x.num, y.den) == ps_mul(y.num, x.den);
}

inline Valuation valuation(const FieldElem& x) {
  if (x.is_zero()) return Valuation::plus_infinity();
  return Valuation::of(x.num.leading().exp - x.den.leading().exp);
}

/// Sign in the ordered field. The leading (lowest-exponent) monomial
/// dominates every later one, and the denominator's leading term is the
/// positive 1*e^0, so the sign of x is the sign of num's leading coefficient.
inline int f_sign(const FieldElem& x) {
  if (x.is_zero()) return 0;
  return sign_of(x.num.leading().coeff);
}

enum class Cmp { LT, EQ, GT };

inline Cmp f_compare(const FieldElem& x, const FieldElem& y) {
  int s = f_sign(f_sub(x, y));
  return s < 0 ? Cmp::LT : (s == 0 ? Cmp::EQ : Cmp::GT);
}

inline bool f_lt(const FieldElem& x, const FieldElem& y) {
  return f_compare(x, y) == Cmp::LT;
}

/// Long-division expansion of num/den, keeping exponents <= upto. Terminates
/// because all exponents live in (1/L)*Z for the common denominator L of the
/// exponents involved, so each step raises the remainder's leading exponent
/// by at least 1/L. Display/diagnostic use only; equality never depends on it.
inline PSeries series_expand(const FieldElem& x, const Rational& upto) {
  PSeries out;
  PSeries rem = x.num;
  while (!rem.is_zero() && rem.leading().exp <= upto) {
    const PTerm t = rem.leading();
    out.terms.push_back(t);
    rem = ps_sub(rem, ps_scale(x.den, t.coeff, t.exp));
  }
  return out;
}

}  // namespace flexmeadow
