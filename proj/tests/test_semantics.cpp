#include "gforge/clause.hpp"
#include "gforge/parser.hpp"
#include "gforge/semantics.hpp"
#include "goedel_identities.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gforge;

namespace {

TruthValue tv(const char* s) { return TruthValue::parse(s); }

// Two elements; p is 0.3 on 0 and 1 on 1, q is 0.5 everywhere.
Interpretation two_element() {
  Interpretation i(2);
  i.set_predicate("p", {0}, tv("0.3"));
  i.set_predicate("p", {1}, tv("1"));
  i.set_predicate("q", {0}, tv("0.5"));
  i.set_predicate("q", {1}, tv("0.5"));
  i.set_function("f", {0}, 1);
  i.set_function("f", {1}, 0);
  return i;
}

}  // namespace

TEST(TruthValue, ParseAndPrint) {
  EXPECT_EQ(tv("0.5"), TruthValue(1, 2));
  EXPECT_EQ(tv("3/10").str(), "0.3");
  EXPECT_EQ(tv("1/3").str(), "1/3");
  EXPECT_EQ(tv("1").str(), "1");
  EXPECT_THROW(tv("abc"), std::invalid_argument);
}

TEST(Operators, Tables) {
  using namespace g;
  const TruthValue a = tv("0.3"), b = tv("0.5");
  EXPECT_EQ(residuum(a, b), TruthValue(1));
  EXPECT_EQ(residuum(b, a), a);
  EXPECT_EQ(negation(TruthValue(0)), TruthValue(1));
  EXPECT_EQ(negation(a), TruthValue(0));
  EXPECT_EQ(delta(a), TruthValue(0));
  EXPECT_EQ(delta(TruthValue(1)), TruthValue(1));
  EXPECT_EQ(prec(a, b), TruthValue(1));
  EXPECT_EQ(prec(b, b), TruthValue(0));
  EXPECT_EQ(eqcirc(b, b), TruthValue(1));
  EXPECT_EQ(biresiduum(a, b), a);
}

TEST(Evaluation, Connectives) {
  Interpretation i = two_element();
  ValueAssignment e{{"x", 0}};
  EXPECT_EQ(eval_truth(parse_formula("p(x) -> q(x)"), i, e), TruthValue(1));
  EXPECT_EQ(eval_truth(parse_formula("q(x) -> p(x)"), i, e), tv("0.3"));
  EXPECT_EQ(eval_truth(parse_formula("p(f(x))"), i, e), TruthValue(1));
  EXPECT_EQ(eval_truth(parse_formula("p(x) < q(x)"), i, e), TruthValue(1));
  EXPECT_EQ(eval_truth(parse_formula("p(x) ~ 0.3"), i, e), TruthValue(1));
  EXPECT_EQ(eval_truth(parse_formula("D q(x)"), i, e), TruthValue(0));
}

TEST(Evaluation, Quantifiers) {
  Interpretation i = two_element();
  EXPECT_EQ(eval_truth(parse_formula("forall x p(x)"), i), tv("0.3"));
  EXPECT_EQ(eval_truth(parse_formula("exists x p(x)"), i), TruthValue(1));
  EXPECT_EQ(eval_truth(parse_formula("forall x (p(x) | q(x))"), i), tv("0.5"));
}

TEST(Evaluation, UnassignedVariableThrows) {
  Interpretation i = two_element();
  EXPECT_THROW(eval_truth(parse_formula("p(x)"), i), std::invalid_argument);
}

TEST(Evaluation, ClauseModels) {
  Interpretation i = two_element();
  Signature sig;
  ClausalTheory s = parse_theory("q(x) ~ 0.5\np(x) < q(x) | p(x) ~ 1\n", sig);
  EXPECT_TRUE(check_model(i, s));
  ClausalTheory t = parse_theory("p(x) ~ 1\n", sig);
  EXPECT_FALSE(check_model(i, t));
}

TEST(GoedelAlgebra, IdentitiesOnRandomTriples) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> den(1, 12);
  auto draw = [&] {
    int d = den(rng);
    return TruthValue(std::uniform_int_distribution<int>(0, d)(rng), d);
  };
  for (int i = 0; i < 10000; ++i) {
    TruthValue a = draw(), b = draw(), c = draw();
    auto fail = check::goedel_identity_failure(a, b, c);
    ASSERT_FALSE(fail) << *fail << " at " << a << ", " << b << ", " << c;
  }
}
