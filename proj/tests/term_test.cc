#include <flexmeadow/law.hpp>
#include <flexmeadow/models.hpp>
#include <flexmeadow/term.hpp>

#include <gtest/gtest.h>

#include <map>

namespace flexmeadow {
namespace {

TEST(TermParse, Shapes) {
  TermPtr t = parse_term("x*(x*x^-1)");
  ASSERT_EQ(t->kind, Term::Kind::Mul);
  EXPECT_EQ(t->a->kind, Term::Kind::Var);
  ASSERT_EQ(t->b->kind, Term::Kind::Mul);
  EXPECT_EQ(t->b->b->kind, Term::Kind::Inv);

  TermPtr u = parse_term("N(x) + y");
  ASSERT_EQ(u->kind, Term::Kind::Add);
  EXPECT_EQ(u->a->kind, Term::Kind::NOf);
  EXPECT_EQ(u->b->kind, Term::Kind::Var);
  EXPECT_EQ(u->b->var, "y");

  // subtraction is negated addition
  TermPtr s = parse_term("x - y");
  ASSERT_EQ(s->kind, Term::Kind::Add);
  EXPECT_EQ(s->b->kind, Term::Kind::Neg);

  // '*' binds tighter than '+'
  TermPtr p = parse_term("x + y*z");
  ASSERT_EQ(p->kind, Term::Kind::Add);
  EXPECT_EQ(p->b->kind, Term::Kind::Mul);

  // postfix inverse chains and binds tighter than unary minus
  TermPtr i = parse_term("-x^-1^-1");
  ASSERT_EQ(i->kind, Term::Kind::Neg);
  ASSERT_EQ(i->a->kind, Term::Kind::Inv);
  EXPECT_EQ(i->a->a->kind, Term::Kind::Inv);

  EXPECT_EQ(parse_term("err")->kind, Term::Kind::Err);
  EXPECT_EQ(parse_term("0")->kind, Term::Kind::Zero);
  EXPECT_EQ(parse_term("1")->kind, Term::Kind::One);

  // bare "N" is reserved for the blur operator; longer identifiers starting
  // with N are ordinary variables
  TermPtr n1 = parse_term("N1 + Nx");
  ASSERT_EQ(n1->kind, Term::Kind::Add);
  EXPECT_EQ(n1->a->kind, Term::Kind::Var);
  EXPECT_EQ(n1->a->var, "N1");
  EXPECT_EQ(n1->b->var, "Nx");
  EXPECT_THROW(parse_term("N + x"), SyntaxError);
}

TEST(TermParse, Errors) {
  EXPECT_THROW(parse_term(""), SyntaxError);
  EXPECT_THROW(parse_term("x +"), SyntaxError);
  EXPECT_THROW(parse_term("x y"), SyntaxError);
  EXPECT_THROW(parse_term("(x"), SyntaxError);
  EXPECT_THROW(parse_term("x^2"), SyntaxError);   // only ^-1 exists
  EXPECT_THROW(parse_term("N x"), SyntaxError);   // N needs '(' or is a var
  EXPECT_THROW(parse_term("err(x)"), SyntaxError);
  try {
    parse_term("x*-y");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_NE(std::string(e.what()).find("unary minus requires parentheses"),
              std::string::npos);
  }
  EXPECT_NO_THROW(parse_term("x*(-y)"));
}

TEST(TermPrint, KnownForms) {
  EXPECT_EQ(print_term(parse_term("(x+y)+z")), "x + y + z");
  EXPECT_EQ(print_term(parse_term("x+(y+z)")), "x + (y + z)");
  EXPECT_EQ(print_term(parse_term("x + -x")), "x - x");
  EXPECT_EQ(print_term(parse_term("--x")), "--x");
  EXPECT_EQ(print_term(parse_term("x^-1^-1")), "x^-1^-1");
  EXPECT_EQ(print_term(parse_term("(1 + N(x)*x^-1)*x")),
            "(1 + N(x)*x^-1)*x");
  EXPECT_EQ(print_term(parse_term("x*(y+z)")), "x*(y + z)");
  EXPECT_EQ(print_term(parse_term("(x*y)*z")), "x*y*z");
  EXPECT_EQ(print_term(parse_term("-(x+y)")), "-(x + y)");
  EXPECT_EQ(print_term(parse_term("(x+y)^-1")), "(x + y)^-1");
  EXPECT_EQ(print_term(parse_term("(-x)^-1")), "(-x)^-1");
  EXPECT_EQ(print_term(parse_term("x*(-y)")), "x*(-y)");
}

// Rendering then re-parsing must reproduce every formula in every built-in
// catalog, node for node.
TEST(TermPrint, RoundTripsEveryCatalogFormula) {
  int formulas = 0;
  for (const std::string& cname : all_catalog_names()) {
    for (const Law& law : catalog(cname)) {
      std::vector<TermPtr> sides;
      if (law.lhs) sides.push_back(law.lhs);
      if (law.rhs) sides.push_back(law.rhs);
      for (const auto& d : law.disjuncts) {
        sides.push_back(d.first);
        sides.push_back(d.second);
      }
      if (law.guard.kind == Guard::Kind::TermEq) {
        sides.push_back(law.guard.lhs);
        sides.push_back(law.guard.rhs);
      }
      for (const TermPtr& side : sides) {
        std::string printed = print_term(side);
        TermPtr back = parse_term(printed);
        EXPECT_TRUE(term_equal(back, side))
            << law.id << ": " << printed << " reparsed differently";
        EXPECT_EQ(print_term(back), printed);
        ++formulas;
      }
    }
  }
  EXPECT_GE(formulas, 100);
}

TEST(TermVars, FirstAppearanceOrder) {
  auto vars = free_vars(parse_term("z + N(x)*y + x"));
  ASSERT_EQ(vars.size(), 3u);
  EXPECT_EQ(vars[0], "z");
  EXPECT_EQ(vars[1], "x");
  EXPECT_EQ(vars[2], "y");
  EXPECT_TRUE(free_vars(parse_term("1 + 0")).empty());
}

TEST(TermEval, Oracles) {
  ExternalModel ext;
  std::map<std::string, ExtNum> env;
  env.emplace("x", ext_neutrix(Neutrix::limited()));
  // multiplying a blur by its own unit keeps the blur unchanged
  ExtNum fi7 = eval_term(ext, parse_term("(1 + N(x)*x^-1)*x"), env);
  EXPECT_TRUE(e_eq(fi7, ext_neutrix(Neutrix::limited())));

  RatInvolutiveModel rat;
  std::map<std::string, Rational> renv;
  EXPECT_EQ(eval_term(rat, parse_term("0^-1"), renv), 0);
  EXPECT_EQ(eval_term(rat, parse_term("1 + 1"), renv), 2);

  FfpCommonModel ffc(3);
  std::map<std::string, std::int64_t> fenv;
  EXPECT_EQ(eval_term(ffc, parse_term("err"), fenv), ffc.err());
  EXPECT_EQ(eval_term(ffc, parse_term("err + 1"), fenv), ffc.err());
}

TEST(TermEval, ErrWithoutErrorElementThrows) {
  ExternalModel ext;
  std::map<std::string, ExtNum> env;
  try {
    eval_term(ext, parse_term("err"), env);
    FAIL() << "expected ErrUnsupported";
  } catch (const ErrUnsupported& e) {
    EXPECT_NE(std::string(e.what()).find("external"), std::string::npos);
  }
}

TEST(TermEval, UnboundVariableThrows) {
  RatInvolutiveModel rat;
  std::map<std::string, Rational> renv;
  renv.emplace("x", 1);
  EXPECT_THROW(eval_term(rat, parse_term("x + y"), renv), UnboundVariable);
}

}  // namespace
}  // namespace flexmeadow
