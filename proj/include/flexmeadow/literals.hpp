#pragma once

#include <cctype>
#include <string>

#include "ext_num.hpp"

namespace flexmeadow {

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace detail {

/// Render |coeff|*e^exp (sign handled by the caller). Elides a unit
/// coefficient, renders the exponent bare when it is a nonnegative integer
/// and parenthesized otherwise, and renders a constant term as a plain
/// rational.
inline std::string monomial_str(const Rational& coeff_abs, const Rational& exp) {
  if (exp == 0) return rat_str(coeff_abs);
  std::string e = "e^";
  if (denominator(exp) == 1 && exp > 0) {
    e += rat_str(exp);
  } else {
    e += "(" + rat_str(exp) + ")";
  }
  if (coeff_abs == 1) return e;
  return rat_str(coeff_abs) + "*" + e;
}

}  // namespace detail

/// "0", or monomials joined with " + " / " - " by coefficient sign, e.g.
/// "1 - e^1 + 3/2*e^(1/2)".
inline std::string print_pseries(const PSeries& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const PTerm& t : p.terms) {
    bool neg = t.coeff < 0;
    Rational mag = neg ? Rational(-t.coeff) : t.coeff;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += detail::monomial_str(mag, t.exp);
  }
  return out;
}

/// Numerator polynomial, followed by " /(denominator)" when the denominator
/// is not 1.
inline std::string print_field_elem(const FieldElem& x) {
  std::string out = print_pseries(x.num);
  if (!(x.den == ps_one())) out += " /(" + print_pseries(x.den) + ")";
  return out;
}

/// "zero" | "full" | "o" | "L" | "cut(q,open|closed)".
inline std::string print_neutrix(const Neutrix& n) {
  switch (n.kind) {
    case Neutrix::Kind::Zero:
      return "zero";
    case Neutrix::Kind::Full:
      return "full";
    case Neutrix::Kind::Cut:
      if (n.q == 0) return n.b == Bound::Open ? "o" : "L";
      return "cut(" + rat_str(n.q) + "," +
             (n.b == Bound::Open ? "open" : "closed") + ")";
  }
  return "zero";
}

/// "<precise part> ; <neutrix>", with the precise part canonicalized for
/// display: the tail of its expansion that lies inside the neutrix carries
/// no information and is dropped (the printed value is the same coset).
/// Equality never depends on this truncation.
inline std::string print_ext(const ExtNum& x) {
  switch (x.N.kind) {
    case Neutrix::Kind::Full:
      return "0 ; full";
    case Neutrix::Kind::Zero:
      return print_field_elem(x.a) + " ; zero";
    case Neutrix::Kind::Cut: {
      PSeries shown = series_expand(x.a, x.N.q);
      if (x.N.b == Bound::Closed && !shown.is_zero() &&
          shown.terms.back().exp == x.N.q) {
        shown.terms.pop_back();
      }
      return print_pseries(shown) + " ; " + print_neutrix(x.N);
    }
  }
  return "0 ; zero";
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

/// Character cursor shared by the literal parsers.
struct Scanner {
  const std::string& src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  char peek_raw(std::size_t ahead = 0) const {
    return pos + ahead < src.size() ? src[pos + ahead] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) throw SyntaxError(std::string("expected '") + c + "' " + what, pos);
  }
  [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, pos); }

  BigInt integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
      ++pos;
    if (pos == start) fail("expected digits");
    return BigInt(src.substr(start, pos - start));
  }

  /// Unsigned rational "p" or "p/q".
  Rational rational_unsigned() {
    BigInt num = integer();
    if (peek_raw() == '/' &&
        std::isdigit(static_cast<unsigned char>(peek_raw(1)))) {
      ++pos;
      BigInt den = integer();
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  /// Signed rational.
  Rational rational_signed() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Rational r = rational_unsigned();
    return neg ? Rational(-r) : r;
  }

  /// Exponent after "e^": either a bare nonnegative integer or "(rational)".
  Rational exponent() {
    if (eat('(')) {
      Rational q = rational_signed();
      expect(')', "after exponent");
      return q;
    }
    return Rational(integer());
  }

  /// One monomial without its structural sign: coeff, coeff*e^q, or e^q.
  PTerm monomial() {
    skip_ws();
    Rational coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek_raw()))) {
      coeff = rational_unsigned();
      have_coeff = true;
    }
    skip_ws();
    bool have_e = false;
    if (have_coeff && peek_raw() == '*') {
      ++pos;
      skip_ws();
      if (peek_raw() != 'e') fail("expected 'e' after '*'");
      have_e = true;
    } else if (!have_coeff) {
      if (peek_raw() != 'e') fail("expected a coefficient or 'e'");
      have_e = true;
    } else if (peek_raw() == 'e') {
      // "2e^1" without '*' is not part of the syntax.
      fail("expected '*' between coefficient and 'e'");
    }
    Rational exp = 0;
    if (have_e) {
      ++pos;  // 'e'
      if (peek_raw() != '^') fail("expected '^' after 'e'");
      ++pos;
      exp = exponent();
    }
    return PTerm{exp, coeff};
  }

  /// Signed sum of monomials.
  PSeries poly() {
    PSeries acc;
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    PTerm t = monomial();
    acc = ps_add(acc, ps_monomial(neg ? Rational(-t.coeff) : t.coeff, t.exp));
    while (true) {
      skip_ws();
      char c = peek_raw();
      if (c != '+' && c != '-') break;
      ++pos;
      PTerm u = monomial();
      acc = ps_add(acc,
                   ps_monomial(c == '-' ? Rational(-u.coeff) : u.coeff, u.exp));
    }
    return acc;
  }

  /// poly [ "/(" poly ")" ]. A '/' directly followed by digits belongs to a
  /// rational coefficient and is consumed inside poly(); only "/(" starts a
  /// denominator.
  FieldElem field_elem() {
    PSeries num = poly();
    skip_ws();
    if (peek_raw() == '/' && [this] {
          std::size_t look = pos + 1;
          while (look < src.size() &&
                 std::isspace(static_cast<unsigned char>(src[look])))
            ++look;
          return look < src.size() && src[look] == '(';
        }()) {
      ++pos;
      expect('(', "to open the denominator");
      PSeries den = poly();
      expect(')', "to close the denominator");
      if (den.is_zero()) fail("zero denominator");
      return FieldElem::make(std::move(num), std::move(den));
    }
    return fe_from_series(std::move(num));
  }

  bool word(const char* w) {
    skip_ws();
    std::size_t look = pos;
    const char* c = w;
    while (*c) {
      if (look >= src.size() || src[look] != *c) return false;
      ++look;
      ++c;
    }
    // Must not continue into a longer identifier.
    if (look < src.size() &&
        (std::isalnum(static_cast<unsigned char>(src[look])) ||
         src[look] == '_'))
      return false;
    pos = look;
    return true;
  }

  Neutrix neutrix() {
    if (word("zero")) return Neutrix::zero();
    if (word("full")) return Neutrix::full();
    if (word("o")) return Neutrix::infinitesimals();
    if (word("L")) return Neutrix::limited();
    if (word("cut")) {
      expect('(', "after 'cut'");
      Rational q = rational_signed();
      expect(',', "between cut point and boundary");
      Bound b;
      if (word("open"))
        b = Bound::Open;
      else if (word("closed"))
        b = Bound::Closed;
      else
        fail("expected 'open' or 'closed'");
      expect(')', "to close 'cut'");
      return Neutrix::cut(q, b);
    }
    fail("expected a neutrix: zero, full, o, L, or cut(q,open|closed)");
  }
};

}  // namespace detail

inline FieldElem parse_field_elem(const std::string& s) {
  detail::Scanner sc{s};
  FieldElem x = sc.field_elem();
  if (!sc.done()) sc.fail("trailing characters");
  return x;
}

inline Neutrix parse_neutrix(const std::string& s) {
  detail::Scanner sc{s};
  Neutrix n = sc.neutrix();
  if (!sc.done()) sc.fail("trailing characters");
  return n;
}

/// "<field element> ; <neutrix>".
inline ExtNum parse_ext(const std::string& s) {
  detail::Scanner sc{s};
  FieldElem a = sc.field_elem();
  sc.expect(';', "between precise part and neutrix");
  Neutrix n = sc.neutrix();
  if (!sc.done()) sc.fail("trailing characters");
  return ExtNum{std::move(a), std::move(n)};
}

}  // namespace flexmeadow
