#include "gforge/clause.hpp"
#include "gforge/formula.hpp"
#include "gforge/parser.hpp"
#include "gforge/term.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace gforge;

TEST(Terms, PrintAndCompare) {
  TermPtr t = app("f", {var("x"), app("c")});
  EXPECT_EQ(format_term(t), "f(x,c)");
  EXPECT_TRUE(term_equal(t, app("f", {var("x"), app("c")})));
  EXPECT_FALSE(term_equal(t, app("f", {var("y"), app("c")})));
  EXPECT_EQ(size(t), 3u);
  EXPECT_FALSE(is_ground(t));
  EXPECT_TRUE(occurs("x", t));
  EXPECT_TRUE(is_ground(substitute(t, {{"x", app("d")}})));
}

TEST(Parser, Precedence) {
  EXPECT_EQ(format_formula(parse_formula("p -> q -> r")), "p -> q -> r");
  EXPECT_TRUE(formula_equal(parse_formula("p -> q -> r"), parse_formula("p -> (q -> r)")));
  EXPECT_TRUE(formula_equal(parse_formula("p <-> q <-> r"), parse_formula("(p <-> q) <-> r")));
  EXPECT_TRUE(formula_equal(parse_formula("p & q | r"), parse_formula("(p & q) | r")));
  EXPECT_TRUE(formula_equal(parse_formula("p | q -> r"), parse_formula("(p | q) -> r")));
  EXPECT_TRUE(formula_equal(parse_formula("p & q & r"), parse_formula("p & (q & r)")));
  EXPECT_TRUE(formula_equal(parse_formula("!p ~ q"), parse_formula("(!p) ~ q")));
  EXPECT_TRUE(formula_equal(parse_formula("p ~ q & r"), parse_formula("(p ~ q) & r")));
}

TEST(Parser, QuantifierScopeIsUnary) {
  FormulaPtr f = parse_formula("forall z r(x,z) ~ 0.3");
  ASSERT_EQ(f->op, Op::Eq);
  EXPECT_EQ(f->lhs->op, Op::Forall);
}

TEST(Parser, ComparisonIsNonAssociative) {
  EXPECT_THROW(parse_formula("p ~ q ~ r"), ParseError);
  EXPECT_THROW(parse_formula("p < q < r"), ParseError);
}

TEST(Parser, Errors) {
  EXPECT_THROW(parse_formula(""), ParseError);
  EXPECT_THROW(parse_formula("p &"), ParseError);
  EXPECT_THROW(parse_formula("(p"), ParseError);
  EXPECT_THROW(parse_formula("p(x"), ParseError);
  EXPECT_THROW(parse_formula("1.5"), ParseError);
}

TEST(Parser, ArityClash) {
  Signature sig;
  EXPECT_THROW(parse_formula("p(x) & p(x,y)", sig), ParseError);
}

TEST(Parser, ReservedNamesNeedOptIn) {
  EXPECT_THROW(parse_formula("$p.0.1(x)"), ParseError);
  EXPECT_THROW(parse_formula("uni(x)"), ParseError);
  Signature sig;
  FormulaPtr f = parse_formula("uni(frac($z,$s($z)))", sig, {true});
  EXPECT_EQ(format_formula(f), "uni(frac($z,$s($z)))");
}

TEST(Parser, ConstantsAreExact) {
  FormulaPtr f = parse_formula("p ~ 0.3");
  EXPECT_EQ(f->rhs->value, TruthValue(3, 10));
  EXPECT_EQ(parse_formula("p ~ 1/3")->rhs->value, TruthValue(1, 3));
}

TEST(Formula, VariablesAndClosure) {
  FormulaPtr f = parse_formula("forall x (p(x,y) -> exists y q(y,z))");
  EXPECT_EQ(free_vars(f), (std::vector<std::string>{"y", "z"}));
  EXPECT_EQ(varseq(f), (std::vector<std::string>{"x", "x", "y", "y", "y", "z"}));
  EXPECT_FALSE(is_closed(f));
  EXPECT_TRUE(is_closed(parse_formula("forall x p(x)")));
}

TEST(Formula, QuantifiedAtoms) {
  EXPECT_TRUE(is_quantified_atom(parse_formula("forall x p(x,y)")));
  EXPECT_FALSE(is_quantified_atom(parse_formula("forall x p(y)")));
  EXPECT_FALSE(is_quantified_atom(parse_formula("forall x p(f(x))")));
  EXPECT_FALSE(is_quantified_atom(parse_formula("forall x (p(x) & q)")));
}

TEST(Formula, SubstituteLeavesBoundOccurrences) {
  FormulaPtr f = parse_formula("p(x) & forall x q(x)");
  FormulaPtr g = substitute(f, {{"x", app("c")}});
  Signature sig;
  sig.declare_function("c", 0);
  EXPECT_TRUE(formula_equal(g, parse_formula("p(c) & forall x q(x)", sig)));
}

TEST(Formula, SizeCountsConnectivesAndLeaves) {
  EXPECT_EQ(size(parse_formula("p")), 1u);
  EXPECT_EQ(size(parse_formula("p & q")), 3u);
  EXPECT_EQ(size(parse_formula("!p")), 2u);
}

TEST(Formula, PrintParseRoundTrip) {
  check::GenOptions opts;
  opts.quantifiers = true;
  check::FormulaGen gen(7, opts);
  for (int i = 0; i < 1000; ++i) {
    FormulaPtr f = gen.next();
    std::string text = format_formula(f);
    FormulaPtr g = parse_formula(text);
    ASSERT_TRUE(formula_equal(f, g)) << text << " reparsed as " << format_formula(g);
  }
}

TEST(Clauses, CanonicalAndDeduplicated) {
  Signature sig;
  OrderClause a = parse_clause("p ~ 1 | q < r", sig);
  OrderClause b = parse_clause("q < r | 1 ~ p", sig);
  EXPECT_EQ(a, b);
  ClausalTheory s;
  s.add(a);
  s.add(b);
  EXPECT_EQ(s.size(), 1u);
}

TEST(Clauses, TheoryRoundTrip) {
  Signature sig;
  ClausalTheory s = parse_theory("p ~ 1\nq < p | r ~ 0.5\n[]\n", sig);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains_empty_clause());
  Signature sig2;
  EXPECT_EQ(parse_theory(format_theory(s), sig2), s);
  auto cs = tcons(s);
  EXPECT_EQ(std::set<TruthValue>(cs.begin(), cs.end()), (std::set<TruthValue>{TruthValue(1, 2), TruthValue(1)}));
}

TEST(Clauses, RejectsNonSides) {
  Signature sig;
  EXPECT_THROW(parse_clause("(p & q) ~ 1", sig), std::exception);
}
