#pragma once

#include <optional>

#include "neutrix.hpp"

namespace flexmeadow {

/// External number: the coset a + N of a neutrix N. The stored precise part
/// is one representative of the coset; equality is semantic (same neutrix
/// and difference of representatives inside it), never representational.
struct ExtNum {
  FieldElem a;
  Neutrix N;
};

inline ExtNum ext_make(FieldElem a, Neutrix n) {
  return ExtNum{std::move(a), std::move(n)};
}
inline ExtNum ext_zero() { return ExtNum{fe_zero(), Neutrix::zero()}; }
inline ExtNum ext_one() { return ExtNum{fe_one(), Neutrix::zero()}; }
inline ExtNum ext_from(const Rational& c) {
  return ExtNum{fe_const(c), Neutrix::zero()};
}
/// The neutrix N viewed as the external number 0 + N.
inline ExtNum ext_neutrix(Neutrix n) { return ExtNum{fe_zero(), std::move(n)}; }

/// x equals its own neutrix part as a set (0 lies in the coset).
inline bool is_neutrix(const ExtNum& x) { return n_contains(x.N, x.a); }

/// 0 does not lie in the coset.
inline bool is_zeroless(const ExtNum& x) { return !is_neutrix(x); }

inline bool e_eq(const ExtNum& x, const ExtNum& y) {
  return x.N == y.N && n_contains(x.N, f_sub(x.a, y.a));
}

/// Set inclusion of cosets: a+A is contained in b+B iff A is contained in B
/// and a-b lies in B.
inline bool subset(const ExtNum& x, const ExtNum& y) {
  return n_subset(x.N, y.N) && n_contains(y.N, f_sub(x.a, y.a));
}

inline ExtNum e_add(const ExtNum& x, const ExtNum& y) {
  return ExtNum{f_add(x.a, y.a), n_sum(x.N, y.N)};
}

inline ExtNum e_neg(const ExtNum& x) { return ExtNum{f_neg(x.a), x.N}; }

inline ExtNum e_sub(const ExtNum& x, const ExtNum& y) {
  return e_add(x, e_neg(y));
}

/// Minkowski product (a+A)(b+B) = ab + aB + bA + AB.
inline ExtNum e_mul(const ExtNum& x, const ExtNum& y) {
  Neutrix n = n_sum(n_sum(n_absorb(x.a, y.N), n_absorb(y.a, x.N)),
                    n_mul(x.N, y.N));
  return ExtNum{f_mul(x.a, y.a), n};
}

/// The neutrix part as an external number: N(a+A) = 0 + A.
inline ExtNum neutrix_part(const ExtNum& x) { return ext_neutrix(x.N); }

/// Total inverse. A zeroless a+A maps to a^-1 + a^-2*A; a neutrix r*I maps
/// to r^-1*I. Total: no error cases, and (0,{0})^-1 = (0,{0}).
inline ExtNum e_inv(const ExtNum& x) {
  if (is_zeroless(x)) {
    FieldElem ia = f_inv(x.a);
    return ExtNum{ia, n_absorb(f_mul(ia, ia), x.N)};
  }
  return ext_neutrix(n_inv(x.N));
}

/// Result of the residuated set quotient; std::nullopt denotes the empty
/// set, which is a legitimate outcome and not an error.
using QuotientResult = std::optional<ExtNum>;

/// Residuated set quotient A*B^-1 = {x : xB is contained in A}.
///
/// For zeroless B the quotient is the coset a/b + (1/b)N(A) exactly when
/// every element of that coset x satisfies x*N(B) inside N(A) — which reduces
/// to (a/b)*N(B) inside N(A) — and in that case it coincides with
/// e_mul(A, e_inv(B)); otherwise it is empty. For a neutrix B other than {0}
/// the quotient is empty when A is zeroless (0 lies in xB but not in A) and
/// otherwise is the set of x whose principal cut multiplied by N(B) stays
/// inside N(A). For B = {0} the quotient is everything or nothing, depending
/// on whether 0 lies in A.
inline QuotientResult set_quotient(const ExtNum& A, const ExtNum& B) {
  using K = Neutrix::Kind;
  if (is_zeroless(B)) {
    FieldElem x0 = f_div(A.a, B.a);
    if (!n_subset(n_absorb(x0, B.N), A.N)) return std::nullopt;
    return e_mul(A, e_inv(B));
  }
  // B is a neutrix; as a set it equals N(B).
  const Neutrix& nb = B.N;
  if (nb.kind == K::Zero) {
    // x*{0} = {0}, so the condition is just 0 in A.
    if (is_neutrix(A)) return ext_neutrix(Neutrix::full());
    return std::nullopt;
  }
  if (is_zeroless(A)) return std::nullopt;
  const Neutrix& na = A.N;
  if (na.kind == K::Full) return ext_neutrix(Neutrix::full());
  // Nonzero x lies in the quotient iff Cut(v(x), Closed)*N(B) is inside
  // N(A); x = 0 always does.
  if (nb.kind == K::Full) return ext_neutrix(Neutrix::zero());
  if (na.kind == K::Zero) return ext_neutrix(Neutrix::zero());
  Rational q = na.q - nb.q;
  bool boundary_in =
      n_subset(n_mul(Neutrix::cut(q, Bound::Closed), nb), na);
  return ext_neutrix(
      Neutrix::cut(q, boundary_in ? Bound::Closed : Bound::Open));
}

/// Inverse-law side condition: unless x is a neutrix, x*x^-1 must be 1 plus
/// an error term e with 1+e itself not an error term. Vacuously true when x
/// is a neutrix.
inline bool check_fil(const ExtNum& x) {
  if (is_neutrix(x)) return true;
  ExtNum z = e_mul(x, e_inv(x));
  if (z.N.kind == Neutrix::Kind::Full) return false;
  if (!is_zeroless(z)) return false;
  return e_eq(z, e_add(ext_one(), neutrix_part(z)));
}

}  // namespace flexmeadow
