#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "term.hpp"

namespace flexmeadow {

// ---------------------------------------------------------------------------
// Laws: identities, guarded identities, disjunctions of identities, and the
// one builtin (FIL) whose side condition is not equational.
// ---------------------------------------------------------------------------

struct Guard {
  enum class Kind { None, Zeroless, Nonzero, TermEq };
  Kind kind = Kind::None;
  std::string var;   // Zeroless / Nonzero
  TermPtr lhs, rhs;  // TermEq

  static Guard none() { return {}; }
  static Guard zeroless(std::string v) {
    return {Kind::Zeroless, std::move(v), nullptr, nullptr};
  }
  static Guard nonzero(std::string v) {
    return {Kind::Nonzero, std::move(v), nullptr, nullptr};
  }
  static Guard term_eq(TermPtr l, TermPtr r) {
    return {Kind::TermEq, {}, std::move(l), std::move(r)};
  }
};

struct Law {
  enum class Kind { Identity, Conditional, Disjunction, Builtin };
  enum class Builtin { None, Fil };

  std::string id;
  std::string catalog;
  Kind kind = Kind::Identity;
  TermPtr lhs, rhs;                                    // Identity/Conditional
  std::vector<std::pair<TermPtr, TermPtr>> disjuncts;  // Disjunction
  Guard guard;                                         // Conditional
  Builtin builtin = Builtin::None;
  std::vector<std::string> vars;  // first-appearance order across all parts
  std::string note;
};

namespace detail {

inline void collect_law_vars(Law& law) {
  law.vars.clear();
  collect_vars(law.lhs, law.vars);
  collect_vars(law.rhs, law.vars);
  for (const auto& [l, r] : law.disjuncts) {
    collect_vars(l, law.vars);
    collect_vars(r, law.vars);
  }
  switch (law.guard.kind) {
    case Guard::Kind::Zeroless:
    case Guard::Kind::Nonzero:
      if (std::find(law.vars.begin(), law.vars.end(), law.guard.var) ==
          law.vars.end())
        law.vars.push_back(law.guard.var);
      break;
    case Guard::Kind::TermEq:
      collect_vars(law.guard.lhs, law.vars);
      collect_vars(law.guard.rhs, law.vars);
      break;
    default:
      break;
  }
}

inline Law identity_law(std::string id, std::string cat, const std::string& l,
                        const std::string& r, std::string note = {}) {
  Law law;
  law.id = std::move(id);
  law.catalog = std::move(cat);
  law.kind = Law::Kind::Identity;
  law.lhs = parse_term(l);
  law.rhs = parse_term(r);
  law.note = std::move(note);
  collect_law_vars(law);
  return law;
}

inline Law conditional_law(std::string id, std::string cat, Guard g,
                           const std::string& l, const std::string& r) {
  Law law;
  law.id = std::move(id);
  law.catalog = std::move(cat);
  law.kind = Law::Kind::Conditional;
  law.guard = std::move(g);
  law.lhs = parse_term(l);
  law.rhs = parse_term(r);
  collect_law_vars(law);
  return law;
}

inline Law disjunction_law(std::string id, std::string cat,
                           std::vector<std::pair<std::string, std::string>> ds) {
  Law law;
  law.id = std::move(id);
  law.catalog = std::move(cat);
  law.kind = Law::Kind::Disjunction;
  for (auto& [l, r] : ds) law.disjuncts.emplace_back(parse_term(l), parse_term(r));
  collect_law_vars(law);
  return law;
}

inline Law fil_law(std::string cat) {
  Law law;
  law.id = "FIL";
  law.catalog = std::move(cat);
  law.kind = Law::Kind::Builtin;
  law.builtin = Law::Builtin::Fil;
  law.guard = Guard::zeroless("x");
  law.vars = {"x"};
  law.note = "builtin: checks x*x^-1 = 1 + N(x*x^-1) and that the product is "
             "not itself a generalized zero";
  return law;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Rendering (for listings and reports)
// ---------------------------------------------------------------------------

inline std::string render_guard(const Guard& g) {
  switch (g.kind) {
    case Guard::Kind::Zeroless: return "zeroless(" + g.var + ")";
    case Guard::Kind::Nonzero: return "nonzero(" + g.var + ")";
    case Guard::Kind::TermEq:
      return print_term(g.lhs) + " = " + print_term(g.rhs);
    default: return "";
  }
}

inline std::string render_law(const Law& law) {
  std::string out = law.id + " : ";
  switch (law.kind) {
    case Law::Kind::Identity:
      out += print_term(law.lhs) + " = " + print_term(law.rhs);
      break;
    case Law::Kind::Conditional:
      out += render_guard(law.guard) + " => " + print_term(law.lhs) + " = " +
             print_term(law.rhs);
      break;
    case Law::Kind::Disjunction: {
      bool first = true;
      for (const auto& [l, r] : law.disjuncts) {
        if (!first) out += " | ";
        first = false;
        out += print_term(l) + " = " + print_term(r);
      }
      break;
    }
    case Law::Kind::Builtin:
      out += "zeroless(x) => x*x^-1 = 1 + N(x*x^-1), a non-degenerate unit";
      break;
  }
  if (!law.note.empty()) out += "   (" + law.note + ")";
  return out;
}

// ---------------------------------------------------------------------------
// Built-in catalogs
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& all_catalog_names() {
  static const std::vector<std::string> names = {
      "involutive",   "common",        "flexible",
      "arithmetical", "neutrix-extra", "derived",
      "regularity",   "distributivity-variants"};
  return names;
}

inline std::vector<Law> catalog(const std::string& name) {
  using detail::conditional_law;
  using detail::disjunction_law;
  using detail::identity_law;
  auto I = [&](const char* id, const char* l, const char* r) {
    return identity_law(id, name, l, r);
  };

  if (name == "involutive") {
    return {
        I("I1", "(x + y) + z", "x + (y + z)"),
        I("I2", "x + y", "y + x"),
        I("I3", "x + 0", "x"),
        I("I4", "x + (-x)", "0"),
        I("I5", "(x*y)*z", "x*(y*z)"),
        I("I6", "x*y", "y*x"),
        I("I7", "1*x", "x"),
        I("I8", "x*(y + z)", "x*y + x*z"),
        I("I9", "(x^-1)^-1", "x"),
        I("I10", "x*(x*x^-1)", "x"),
    };
  }
  if (name == "common") {
    return {
        I("M1", "(x + y) + z", "x + (y + z)"),
        I("M2", "x + y", "y + x"),
        I("M3", "x + 0", "x"),
        I("M4", "x + (-x)", "0*x"),
        I("M5", "(x*y)*z", "x*(y*z)"),
        I("M6", "x*y", "y*x"),
        I("M7", "1*x", "x"),
        I("M8", "x*(y + z)", "x*y + x*z"),
        I("M9", "-(-x)", "x"),
        I("M10", "x*x^-1", "1 + 0*x^-1"),
        I("M11", "(x*y)^-1", "x^-1*y^-1"),
        I("M12", "(1 + 0*x)^-1", "1 + 0*x"),
        I("M13", "0^-1", "err"),
        I("M14", "x + err", "err"),
    };
  }
  if (name == "flexible") {
    return {
        I("FI1", "(x + y) + z", "x + (y + z)"),
        I("FI2", "x + y", "y + x"),
        I("FI3", "x + N(x)", "x"),
        I("FI4", "x + (-x)", "N(x)"),
        I("FI5", "(x*y)*z", "x*(y*z)"),
        I("FI6", "x*y", "y*x"),
        I("FI7", "(1 + N(x)*x^-1)*x", "x"),
        I("FI8", "x*(y + z)", "x*y + x*z + N(x)*y + N(x)*z"),
        I("FI9", "(x^-1)^-1", "x"),
        I("FI10", "x*(x*x^-1)", "x"),
    };
  }
  if (name == "arithmetical") {
    return {
        I("A1", "x + (-x)", "N(x)"),
        I("A2", "x + N(x)", "x"),
        detail::fil_law(name),
    };
  }
  if (name == "neutrix-extra") {
    return {
        disjunction_law("N1", name,
                        {{"N(x + y)", "N(x)"}, {"N(x + y)", "N(y)"}}),
        I("N2", "N(-x)", "N(x)"),
    };
  }
  if (name == "derived") {
    return {
        conditional_law("cancel-add-fwd", name,
                        Guard::term_eq(parse_term("x + y"), parse_term("x + z")),
                        "N(x) + y", "N(x) + z"),
        conditional_law("cancel-add-bwd", name,
                        Guard::term_eq(parse_term("N(x) + y"),
                                       parse_term("N(x) + z")),
                        "x + y", "x + z"),
        I("nsum-idem", "N(x) + N(x)", "N(x)"),
        I("n-additive", "N(x + y)", "N(x) + N(y)"),
        I("n-idem", "N(N(x))", "N(x)"),
        conditional_law("n-fixpoint", name,
                        Guard::term_eq(parse_term("x"), parse_term("N(y)")),
                        "x", "N(x)"),
        I("neg-involution", "-(-x)", "x"),
        I("neg-add", "-(x + y)", "-x - y"),
        I("n-symmetric", "N(x)", "-N(x)"),
    };
  }
  if (name == "regularity") {
    return {identity_law(
        "vn-regular", name, "x*(x*x^-1)", "x",
        "regularity x*x*y = x discharged with the explicit witness y = x^-1")};
  }
  if (name == "distributivity-variants") {
    return {
        I("FI8", "x*(y + z)", "x*y + x*z + N(x)*y + N(x)*z"),
        I("dist-classical", "x*(y + z)", "x*y + x*z"),
        I("dist-corrected", "x*y + x*z", "x*(y + z) + N(x)*y + N(x)*z"),
    };
  }
  throw UnknownCatalog("unknown catalog '" + name + "'");
}

// ---------------------------------------------------------------------------
// Law files: one law per line,
//   <id> : <term> = <term>
//   <id> : zeroless(v) => <term> = <term>
//   <id> : nonzero(v) => <term> = <term>
// with '#' comments and blank lines.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline Guard parse_guard(const std::string& src, int lineno) {
  Scanner sc{src};
  sc.skip_ws();
  std::size_t start = sc.pos;
  while (std::isalpha(static_cast<unsigned char>(sc.peek_raw()))) ++sc.pos;
  std::string kw = src.substr(start, sc.pos - start);
  if (kw != "zeroless" && kw != "nonzero")
    throw SyntaxError("law file line " + std::to_string(lineno) +
                          ": expected guard zeroless(v) or nonzero(v)",
                      sc.pos);
  sc.expect('(', "after guard keyword");
  sc.skip_ws();
  std::size_t vstart = sc.pos;
  while (std::isalnum(static_cast<unsigned char>(sc.peek_raw())) ||
         sc.peek_raw() == '_')
    ++sc.pos;
  std::string var = src.substr(vstart, sc.pos - vstart);
  if (var.empty())
    throw SyntaxError("law file line " + std::to_string(lineno) +
                          ": expected a variable in the guard",
                      sc.pos);
  sc.expect(')', "to close the guard");
  if (!sc.done())
    throw SyntaxError("law file line " + std::to_string(lineno) +
                          ": unexpected characters after guard",
                      sc.pos);
  return kw == "zeroless" ? Guard::zeroless(var) : Guard::nonzero(var);
}

}  // namespace detail

inline std::vector<Law> load_laws(std::istream& in,
                                  const std::string& catalog_label) {
  std::vector<Law> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (std::size_t hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw SyntaxError("law file line " + std::to_string(lineno) +
                            ": expected '<id> : <equation>'",
                        0);
    std::string id = detail::trim(line.substr(0, colon));
    if (id.empty())
      throw SyntaxError(
          "law file line " + std::to_string(lineno) + ": empty law id", 0);
    std::string rest = line.substr(colon + 1);
    Guard guard = Guard::none();
    if (std::size_t arrow = rest.find("=>"); arrow != std::string::npos) {
      guard = detail::parse_guard(rest.substr(0, arrow), lineno);
      rest = rest.substr(arrow + 2);
    }
    std::size_t eq = rest.find('=');
    if (eq == std::string::npos)
      throw SyntaxError("law file line " + std::to_string(lineno) +
                            ": expected '<lhs> = <rhs>'",
                        0);
    try {
      if (guard.kind == Guard::Kind::None) {
        out.push_back(detail::identity_law(id, catalog_label,
                                           rest.substr(0, eq),
                                           rest.substr(eq + 1)));
      } else {
        out.push_back(detail::conditional_law(id, catalog_label, guard,
                                              rest.substr(0, eq),
                                              rest.substr(eq + 1)));
      }
    } catch (const SyntaxError& e) {
      throw SyntaxError(
          "law file line " + std::to_string(lineno) + ": " + e.what(), 0);
    }
  }
  return out;
}

inline std::vector<Law> load_laws_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open law file '" + path + "'");
  return load_laws(in, path);
}

}  // namespace flexmeadow
