#include "gforge/parser.hpp"
#include "gforge/simplifier.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace gforge;

namespace {

std::string simp(const std::string& text) { return format_formula(simplify(parse_formula(text))); }

}  // namespace

TEST(Simplify, RemovesNegationAndDelta) {
  EXPECT_EQ(simp("!p(x)"), "p(x) -> 0");
  EXPECT_EQ(simp("D p"), "p ~ 1");
  EXPECT_EQ(simp("!!p"), "(p -> 0) -> 0");
  EXPECT_EQ(simp("D (p -> q)"), "(p -> q) ~ 1");
}

TEST(Simplify, FoldsConstants) {
  EXPECT_EQ(simp("p & 1"), "p");
  EXPECT_EQ(simp("p & 0"), "0");
  EXPECT_EQ(simp("p | 1"), "1");
  EXPECT_EQ(simp("p -> 1"), "1");
  EXPECT_EQ(simp("1 -> p"), "p");
  EXPECT_EQ(simp("p <-> 1"), "p");
  EXPECT_EQ(simp("p ~ p"), "1");
  EXPECT_EQ(simp("0.3 < 0.5"), "1");
  EXPECT_EQ(simp("0.5 -> 0.3"), "0.3");
  EXPECT_EQ(simp("forall x (p(x) & 1)"), "forall x p(x)");
}

TEST(Simplify, KeepsProperComparisons) { EXPECT_EQ(simp("0 < p"), "0 < p"); }

TEST(Simplify, NormalFormViolationDetectsNegation) {
  EXPECT_TRUE(normal_form_violation(parse_formula("!p")));
  EXPECT_TRUE(normal_form_violation(parse_formula("D p")));
  EXPECT_FALSE(normal_form_violation(parse_formula("p -> q")));
}

// Equivalence against the reference evaluator on a grid that contains the
// constants and points strictly between them.
TEST(Simplify, PreservesTruthValues) {
  check::FormulaGen gen(3);
  const std::vector<Rational> grid = {Rational(0),    Rational(1, 7), Rational(3, 10), Rational(2, 5),
                                      Rational(1, 2), Rational(2, 3), Rational(1)};
  const auto vals = check::valuations({"p", "q", "r"}, grid);
  for (int i = 0; i < 500; ++i) {
    FormulaPtr f = gen.next();
    FormulaPtr g = simplify(f);
    for (const auto& v : vals)
      ASSERT_EQ(check::ref_eval(f, v), check::ref_eval(g, v)) << format_formula(f) << " vs " << format_formula(g);
  }
}

TEST(Simplify, SizeAndNormalForm) {
  check::GenOptions opts;
  opts.quantifiers = true;
  check::FormulaGen gen(5, opts);
  for (int i = 0; i < 1000; ++i) {
    FormulaPtr f = gen.next();
    FormulaPtr g = simplify(f);
    ASSERT_LE(size(g), 2 * size(f)) << format_formula(f);
    auto v = normal_form_violation(g);
    ASSERT_FALSE(v) << format_formula(f) << ": " << *v;
  }
}
