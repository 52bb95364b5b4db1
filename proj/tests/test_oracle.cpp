#include "gforge/clause.hpp"
#include "gforge/ground.hpp"
#include "gforge/oracle.hpp"
#include "gforge/parser.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gforge;

namespace {

GroundTheory theory(const std::string& text) {
  Signature sig;
  return ground_theory(parse_theory(text, sig));
}

std::vector<TruthValue> valuation_of(const GroundTheory& t, const SatReport& r) {
  std::vector<TruthValue> v;
  for (const auto& a : t.atoms) v.push_back(r.witness.at(a));
  return v;
}

// Random ground order clauses over three atoms and the constants
// {0, 0.3, 0.5, 1}.
std::string random_theory(std::mt19937& rng) {
  static const char* sides[] = {"p", "q", "r", "0", "0.3", "0.5", "1"};
  std::uniform_int_distribution<int> side(0, 6), count(1, 4), width(1, 3), rel(0, 1);
  std::string text;
  for (int c = count(rng); c > 0; --c) {
    std::string clause;
    for (int l = width(rng); l > 0; --l) {
      std::string a = sides[side(rng)], b = sides[side(rng)];
      if (!clause.empty()) clause += " | ";
      clause += a + (rel(rng) ? " < " : " ~ ") + b;
    }
    text += clause + "\n";
  }
  return text;
}

}  // namespace

TEST(Oracle, SimpleVerdicts) {
  EXPECT_TRUE(solve(theory("p < q\nq ~ 0.5\n")).sat);
  EXPECT_FALSE(solve(theory("p < q\nq < p\n")).sat);
  EXPECT_FALSE(solve(theory("p < 0\n")).sat);
  EXPECT_FALSE(solve(theory("[]\n")).sat);
  EXPECT_TRUE(solve(theory("0.3 < p | p ~ 0\np < 0.5\n")).sat);
}

TEST(Oracle, WitnessSatisfiesTheory) {
  GroundTheory t = theory("p < q\nq < r\nr < 1\n0.3 < p\n");
  SatReport r = solve(t);
  ASSERT_TRUE(r.sat);
  EXPECT_TRUE(theory_true(t, valuation_of(t, r)));
  EXPECT_LT(TruthValue(3, 10), r.witness.at("p"));
}

TEST(Oracle, QuantifiedSidesOverDomain) {
  // a and b are declared as constants; undeclared identifiers are variables.
  Signature sig;
  sig.declare_function("a", 0);
  ClausalTheory s = parse_theory("forall x p(x) ~ 1\np(a) < 1\n", sig);
  EXPECT_FALSE(solve(instantiate(s, {app("a"), app("b")})).sat);
  Signature sig2;
  sig2.declare_function("a", 0);
  ClausalTheory s2 = parse_theory("exists x p(x) ~ 1\np(a) < 1\n", sig2);
  EXPECT_TRUE(solve(instantiate(s2, {app("a"), app("b")})).sat);
  Signature sig3;
  ClausalTheory s3 = parse_theory("exists x p(x) ~ 1\np(y) < 1\n", sig3);
  EXPECT_FALSE(solve(instantiate(s3, {app("a"), app("b")})).sat);
}

TEST(Oracle, SerialAndParallelGridAgree) {
  std::mt19937 rng(31);
  for (int i = 0; i < 200; ++i) {
    GroundTheory t = theory(random_theory(rng));
    SatReport a = enumerate_grid_serial(t, t.atoms.size());
    SatReport b = enumerate_grid_parallel(t, t.atoms.size());
    ASSERT_EQ(a.sat, b.sat);
    ASSERT_EQ(a.witness, b.witness);
  }
}

TEST(Oracle, OrderSearchAgreesWithGrid) {
  std::mt19937 rng(37);
  for (int i = 0; i < 500; ++i) {
    std::string text = random_theory(rng);
    GroundTheory t = theory(text);
    SatReport grid = enumerate_grid_serial(t, t.atoms.size());
    SatReport search = solve(t);
    ASSERT_EQ(grid.sat, search.sat) << text;
    if (search.sat) ASSERT_TRUE(theory_true(t, valuation_of(t, search))) << text;
  }
}

TEST(Oracle, GridContainsConstantsAndInteriorPoints) {
  auto g = sat_grid({TruthValue(0), TruthValue(1, 2), TruthValue(1)}, 1);
  EXPECT_EQ(g, (std::vector<TruthValue>{TruthValue(0), TruthValue(1, 4), TruthValue(1, 2), TruthValue(3, 4), TruthValue(1)}));
}
