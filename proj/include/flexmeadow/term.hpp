#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "carrier.hpp"
#include "literals.hpp"

namespace flexmeadow {

// ---------------------------------------------------------------------------
// Terms over the signature {0, 1, err, +, *, -, ^-1, N}
// ---------------------------------------------------------------------------

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Var, Zero, One, Err, Add, Mul, Neg, Inv, NOf };
  Kind kind;
  std::string var;        // Var only
  TermPtr a, b;           // operands (b only for Add/Mul)
};

inline TermPtr t_var(std::string name) {
  return std::make_shared<Term>(Term{Term::Kind::Var, std::move(name), nullptr, nullptr});
}
inline TermPtr t_zero() { return std::make_shared<Term>(Term{Term::Kind::Zero, {}, nullptr, nullptr}); }
inline TermPtr t_one() { return std::make_shared<Term>(Term{Term::Kind::One, {}, nullptr, nullptr}); }
inline TermPtr t_err() { return std::make_shared<Term>(Term{Term::Kind::Err, {}, nullptr, nullptr}); }
inline TermPtr t_add(TermPtr a, TermPtr b) {
  return std::make_shared<Term>(Term{Term::Kind::Add, {}, std::move(a), std::move(b)});
}
inline TermPtr t_mul(TermPtr a, TermPtr b) {
  return std::make_shared<Term>(Term{Term::Kind::Mul, {}, std::move(a), std::move(b)});
}
inline TermPtr t_neg(TermPtr a) {
  return std::make_shared<Term>(Term{Term::Kind::Neg, {}, std::move(a), nullptr});
}
inline TermPtr t_inv(TermPtr a) {
  return std::make_shared<Term>(Term{Term::Kind::Inv, {}, std::move(a), nullptr});
}
inline TermPtr t_nof(TermPtr a) {
  return std::make_shared<Term>(Term{Term::Kind::NOf, {}, std::move(a), nullptr});
}

inline bool term_equal(const TermPtr& s, const TermPtr& t) {
  if (s == t) return true;
  if (!s || !t || s->kind != t->kind) return false;
  if (s->kind == Term::Kind::Var) return s->var == t->var;
  return term_equal(s->a, t->a) && term_equal(s->b, t->b);
}

// ---------------------------------------------------------------------------
// Parsing
//
//   term    := sum
//   sum     := prod { ("+" | "-") prod }
//   prod    := unary { "*" postfix }       (no bare unary minus after "*")
//   unary   := "-" unary | postfix
//   postfix := atom { "^-1" }
//   atom    := "0" | "1" | "err" | "N" "(" term ")" | ident | "(" term ")"
// ---------------------------------------------------------------------------

namespace detail {

struct TermParser {
  Scanner sc;

  explicit TermParser(const std::string& src) : sc{src} {}

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string ident() {
    sc.skip_ws();
    std::size_t start = sc.pos;
    if (!ident_start(sc.peek_raw())) sc.fail("expected an identifier");
    while (ident_char(sc.peek_raw())) ++sc.pos;
    return sc.src.substr(start, sc.pos - start);
  }

  TermPtr atom() {
    char c = sc.peek();
    if (c == '(') {
      sc.eat('(');
      TermPtr t = sum();
      sc.expect(')', "to close the group");
      return t;
    }
    if (c == '0') {
      sc.eat('0');
      return t_zero();
    }
    if (c == '1') {
      sc.eat('1');
      return t_one();
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      sc.fail("only the constants 0 and 1 are terms");
    if (!ident_start(c)) sc.fail("expected a term");
    std::string name = ident();
    if (name == "err") return t_err();
    if (name == "N") {
      sc.expect('(', "after N");
      TermPtr t = sum();
      sc.expect(')', "to close N(...)");
      return t_nof(t);
    }
    return t_var(std::move(name));
  }

  TermPtr postfix() {
    TermPtr t = atom();
    while (sc.peek() == '^') {
      sc.eat('^');
      sc.expect('-', "in '^-1'");
      sc.expect('1', "in '^-1'");
      t = t_inv(std::move(t));
    }
    return t;
  }

  TermPtr unary() {
    if (sc.eat('-')) return t_neg(unary());
    return postfix();
  }

  TermPtr prod() {
    TermPtr t = unary();
    while (sc.peek() == '*') {
      sc.eat('*');
      if (sc.peek() == '-')
        sc.fail("unary minus requires parentheses after '*'");
      t = t_mul(std::move(t), postfix());
    }
    return t;
  }

  TermPtr sum() {
    TermPtr t = prod();
    for (;;) {
      if (sc.eat('+')) {
        t = t_add(std::move(t), prod());
      } else if (sc.eat('-')) {
        t = t_add(std::move(t), t_neg(prod()));
      } else {
        return t;
      }
    }
  }
};

}  // namespace detail

inline TermPtr parse_term(const std::string& src) {
  detail::TermParser p(src);
  TermPtr t = p.sc.done() ? nullptr : p.sum();
  if (!t) p.sc.fail("expected a term");
  if (!p.sc.done()) p.sc.fail("unexpected trailing characters");
  return t;
}

// ---------------------------------------------------------------------------
// Printing (inverse of parse_term up to whitespace)
// ---------------------------------------------------------------------------

namespace detail {

// Precedence levels: 0 sum, 1 prod, 2 unary, 3 postfix, 4 atom.
inline int term_level(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Add: return 0;
    case Term::Kind::Mul: return 1;
    case Term::Kind::Neg: return 2;
    case Term::Kind::Inv: return 3;
    default: return 4;
  }
}

inline std::string render_term(const TermPtr& t, int min_level) {
  if (term_level(*t) < min_level) return "(" + render_term(t, 0) + ")";
  switch (t->kind) {
    case Term::Kind::Var: return t->var;
    case Term::Kind::Zero: return "0";
    case Term::Kind::One: return "1";
    case Term::Kind::Err: return "err";
    case Term::Kind::NOf: return "N(" + render_term(t->a, 0) + ")";
    case Term::Kind::Inv: return render_term(t->a, 3) + "^-1";
    case Term::Kind::Neg: return "-" + render_term(t->a, 2);
    case Term::Kind::Mul:
      return render_term(t->a, 1) + "*" + render_term(t->b, 3);
    case Term::Kind::Add:
      if (t->b->kind == Term::Kind::Neg)
        return render_term(t->a, 0) + " - " + render_term(t->b->a, 1);
      return render_term(t->a, 0) + " + " + render_term(t->b, 1);
  }
  return "";
}

}  // namespace detail

inline std::string print_term(const TermPtr& t) { return detail::render_term(t, 0); }

/// Free variables in first-appearance order, deduplicated.
inline void collect_vars(const TermPtr& t, std::vector<std::string>& out) {
  if (!t) return;
  if (t->kind == Term::Kind::Var) {
    if (std::find(out.begin(), out.end(), t->var) == out.end())
      out.push_back(t->var);
    return;
  }
  collect_vars(t->a, out);
  collect_vars(t->b, out);
}

inline std::vector<std::string> free_vars(const TermPtr& t) {
  std::vector<std::string> out;
  collect_vars(t, out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

template <meadow_carrier M>
using value_of = typename M::value_type;

template <meadow_carrier M>
value_of<M> eval_term(const M& m, const TermPtr& t,
                      const std::map<std::string, value_of<M>>& env) {
  switch (t->kind) {
    case Term::Kind::Var: {
      auto it = env.find(t->var);
      if (it == env.end())
        throw UnboundVariable("variable '" + t->var + "' is not bound");
      return it->second;
    }
    case Term::Kind::Zero: return m.zero();
    case Term::Kind::One: return m.one();
    case Term::Kind::Err:
      if constexpr (has_err<M>) {
        return m.err();
      } else {
        throw ErrUnsupported("model '" + m.name() +
                             "' has no error element for 'err'");
      }
    case Term::Kind::Add: return m.add(eval_term(m, t->a, env), eval_term(m, t->b, env));
    case Term::Kind::Mul: return m.mul(eval_term(m, t->a, env), eval_term(m, t->b, env));
    case Term::Kind::Neg: return m.neg(eval_term(m, t->a, env));
    case Term::Kind::Inv: return m.inv(eval_term(m, t->a, env));
    case Term::Kind::NOf: return m.nfun(eval_term(m, t->a, env));
  }
  throw Error("unreachable term kind");
}

}  // namespace flexmeadow
