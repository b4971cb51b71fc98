#pragma once

#include <utility>

#include "field_elem.hpp"

namespace flexmeadow {

namespace detail {
/// Test hook: when set, the product of two cuts is closed when EITHER factor
/// is closed. The correct rule requires BOTH (the value group is dense, so
/// products of elements strictly inside two open cuts never reach the
/// boundary). The self-check suite flips this to confirm that a broken
/// multiplication table is actually detected; it must stay false otherwise.
inline bool broken_product_boundary = false;
}  // namespace detail

enum class Bound { Closed, Open };

/// Convex additive subgroup of the field, represented by where it cuts the
/// rational value group:
///   Zero        = {0}
///   Cut(q, Closed) = {x : v(x) >= q}
///   Cut(q, Open)   = {x : v(x) >  q}
///   Full        = the whole field
/// 0 belongs to every variant via v(0) = +infinity. Inclusion totally orders
/// these sets, with Zero the smallest and Full the largest.
struct Neutrix {
  enum class Kind { Zero, Cut, Full };

  Kind kind = Kind::Zero;
  Rational q = 0;           // cut point, meaningful for Kind::Cut only
  Bound b = Bound::Closed;  // boundary flag, meaningful for Kind::Cut only

  static Neutrix zero() { return Neutrix{Kind::Zero, 0, Bound::Closed}; }
  static Neutrix full() { return Neutrix{Kind::Full, 0, Bound::Closed}; }
  static Neutrix cut(const Rational& q, Bound b) {
    return Neutrix{Kind::Cut, q, b};
  }
  /// The infinitesimals: {x : v(x) > 0}.
  static Neutrix infinitesimals() { return cut(0, Bound::Open); }
  /// The limited (finite) elements: {x : v(x) >= 0}.
  static Neutrix limited() { return cut(0, Bound::Closed); }

  friend bool operator==(const Neutrix& a, const Neutrix& b) {
    if (a.kind != b.kind) return false;
    if (a.kind != Kind::Cut) return true;
    return a.q == b.q && a.b == b.b;
  }
};

/// Membership test by valuation.
inline bool n_contains(const Neutrix& n, const FieldElem& x) {
  switch (n.kind) {
    case Neutrix::Kind::Zero:
      return x.is_zero();
    case Neutrix::Kind::Full:
      return true;
    case Neutrix::Kind::Cut: {
      Valuation v = valuation(x);
      Valuation c = Valuation::of(n.q);
      return n.b == Bound::Closed ? v >= c : v > c;
    }
  }
  return false;
}

/// Total inclusion order. A higher cut point means a smaller set; at equal
/// cut points the open cut is the smaller one.
inline bool n_subset(const Neutrix& a, const Neutrix& b) {
  using K = Neutrix::Kind;
  if (a.kind == K::Zero || b.kind == K::Full) return true;
  if (a.kind == K::Full || b.kind == K::Zero) return false;
  if (a.q != b.q) return a.q > b.q;
  return a.b == Bound::Open || b.b == Bound::Closed;
}

/// Minkowski sum {x+y : x in A, y in B}. The sum of two nested groups is the
/// larger one.
inline Neutrix n_sum(const Neutrix& a, const Neutrix& b) {
  return n_subset(a, b) ? b : a;
}

/// Minkowski product {x*y : x in A, y in B}. Cut points add; the product cut
/// is closed only when both factors are closed.
inline Neutrix n_mul(const Neutrix& a, const Neutrix& b) {
  using K = Neutrix::Kind;
  if (a.kind == K::Zero || b.kind == K::Zero) return Neutrix::zero();
  if (a.kind == K::Full || b.kind == K::Full) return Neutrix::full();
  Bound rb = (a.b == Bound::Closed && b.b == Bound::Closed) ? Bound::Closed
                                                            : Bound::Open;
  if (detail::broken_product_boundary)
    rb = (a.b == Bound::Closed || b.b == Bound::Closed) ? Bound::Closed
                                                        : Bound::Open;
  return Neutrix::cut(a.q + b.q, rb);
}

/// Scalar multiple {a*y : y in N}: shifts a cut by v(a).
inline Neutrix n_absorb(const FieldElem& a, const Neutrix& n) {
  if (a.is_zero()) return Neutrix::zero();
  if (n.kind != Neutrix::Kind::Cut) return n;
  return Neutrix::cut(n.q + valuation(a).value, n.b);
}

inline bool is_idempotent(const Neutrix& n) { return n_mul(n, n) == n; }

/// Every neutrix is r*I for a unique idempotent neutrix I. The scalar r is
/// not unique; this returns the canonical monomial choice r = e^q, which
/// keeps the operation deterministic without any choice principle.
inline std::pair<FieldElem, Neutrix> decompose(const Neutrix& n) {
  if (n.kind != Neutrix::Kind::Cut) return {fe_one(), n};
  return {fe_eps_pow(n.q), Neutrix::cut(0, n.b)};
}

/// Inverse of a neutrix: with N = r*I, the inverse is r^-1 * I. Concretely
/// Zero -> Zero, Full -> Full, Cut(q,b) -> Cut(-q,b).
inline Neutrix n_inv(const Neutrix& n) {
  auto [r, i] = decompose(n);
  return n_absorb(f_inv(r), i);
}

}  // namespace flexmeadow
