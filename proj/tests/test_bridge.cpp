#include "gforge/analysis.hpp"
#include "gforge/bridge.hpp"
#include "gforge/frb_parser.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace gforge;

namespace {

struct Instance {
  FrbFile file;
  FuzzyAssignment e0;
};

Instance load(const std::string& name) {
  FrbFile f = load_frb(check::data_path(name));
  FuzzyAssignment e0 = make_assignment(f.base, f.init);
  return {std::move(f), std::move(e0)};
}

const FuzzyRule& rule(const RuleBase& b, const std::string& label) {
  for (const auto& r : b.rules)
    if (r.label == label) return r;
  throw std::out_of_range(label);
}

ClausalTheory load_oct(const std::string& name) {
  Signature sig;
  return parse_theory(check::read_text(check::data_path(name)), sig);
}

// Whether the problem holds within the scope of a reduction with horizon T:
// goal times range over 0..T, and the rule formulas at tau = T define the
// state at T+1, so cycle comparisons may look up to T+1.
bool holds_within(const RuleBase& b, const FuzzyAssignment& e0, const ProblemSpec& p, std::size_t horizon) {
  switch (p.kind) {
    case ProblemSpec::Kind::Stability:
      return check_stability(derive(b, e0, horizon + 1)).has_value();
    case ProblemSpec::Kind::KCycle:
      return find_k_cycle(derive(b, e0, horizon + 1), p.k).has_value();
    case ProblemSpec::Kind::Reachability: {
      std::vector<Target> ts;
      for (const auto& t : p.targets) ts.push_back({t.var, b.set(t.set).membership});
      return check_reachability(b, derive(b, e0, horizon), ts).has_value();
    }
  }
  return false;
}

}  // namespace

TEST(Numerals, EncodeAndDecode) {
  EXPECT_EQ(format_term(nat_numeral(0)), "$z");
  EXPECT_EQ(format_term(nat_numeral(2)), "$s($s($z))");
  EXPECT_EQ(format_term(rational_numeral(Rational(3))), "frac($s($s($s($z))),$s($z))");
  EXPECT_EQ(format_term(rational_numeral(Rational(2, 4))), "frac($s($z),$s($s($z)))");
  EXPECT_EQ(format_term(rational_numeral(Rational(-1, 2))), "nfrac($s($z),$s($s($z)))");
  for (Rational q : {Rational(0), Rational(5, 3), Rational(-7, 2), Rational(4)}) {
    auto n = decode_numeral(rational_numeral(q));
    ASSERT_TRUE(n);
    EXPECT_EQ(n->value(), q);
  }
  EXPECT_EQ(decode_numeral(nat_numeral(3))->kind, Numeral::Kind::Nat);
  EXPECT_FALSE(decode_numeral(app("c")));
  EXPECT_THROW(rational_numeral(Rational(1, 5000)), std::invalid_argument);
}

TEST(Translation, DomainAxioms) { EXPECT_EQ(domain_axioms(working_signature()).size(), 10u); }

TEST(Translation, UniverseClauses) {
  Instance t = load("thermo.frb");
  UniverseClauses u(t.file.base.universe);
  EXPECT_EQ(u.members().size(), 5u);
  EXPECT_EQ(u.positive().size(), 5u);
  EXPECT_EQ(u.value(rational_numeral(Rational(2))), TruthValue(1));
  EXPECT_EQ(u.value(rational_numeral(Rational(7))), TruthValue(0));
  EXPECT_EQ(u.value(nat_numeral(1)), TruthValue(0));
  EXPECT_EQ(u.member_index(rational_numeral(Rational(4))), std::optional<std::size_t>(4));
  EXPECT_EQ(u.instantiate({nat_numeral(0), rational_numeral(Rational(1))}).size(), 6u);
}

TEST(Translation, SetAndAssignmentConstants) {
  Instance t = load("thermo.frb");
  ClausalTheory s = fuzzy_set_clauses(t.file.base);
  s.add_all(assignment_clauses(t.file.base, t.e0));
  std::set<TruthValue> used;
  for (const auto& fs : t.file.base.sets) used.insert(fs.membership.begin(), fs.membership.end());
  for (const auto& m : t.e0) used.insert(m.begin(), m.end());
  auto cs = tcons(s);
  EXPECT_EQ(std::set<TruthValue>(cs.begin(), cs.end()), used);
}

TEST(Translation, BaseTheoryShape) {
  Instance t = load("thermo.frb");
  EXPECT_EQ(base_theory(t.file.base).size(), t.file.base.rules.size() + t.file.base.variables.size());
}

TEST(Translation, RuleOneMatchesReferenceBlock) {
  Instance t = load("thermo.frb");
  TranslationResult r = clausify_positive(rule_formula(rule(t.file.base, "R1")), 1, {{"tau", "x", "y"}});
  ClausalTheory expected = load_oct("phi1_reference.oct");
  EXPECT_EQ(r.clauses.size(), expected.size());
  EXPECT_TRUE(isomorphic_up_to_fresh_renaming(r.clauses, expected)) << format_theory(r.clauses);
}

TEST(Translation, RuleSevenMatchesReferenceBlock) {
  Instance t = load("thermo.frb");
  TranslationResult r = clausify_positive(rule_formula(rule(t.file.base, "R7")), 7, {{"tau", "x", "y"}});
  ClausalTheory expected = load_oct("phi7_reference.oct");
  EXPECT_EQ(r.clauses.size(), expected.size());
  EXPECT_TRUE(isomorphic_up_to_fresh_renaming(r.clauses, expected)) << format_theory(r.clauses);
}

TEST(Problems, OneCycleIsStability) {
  Instance t = load("thermo.frb");
  EXPECT_TRUE(formula_equal(problem_formula(t.file.base, ProblemSpec::cycle(1)),
                            problem_formula(t.file.base, ProblemSpec::stability())));
  EXPECT_THROW(ProblemSpec::cycle(0), std::invalid_argument);
}

TEST(Problems, ReachabilityValidatesTargets) {
  Instance t = load("thermo.frb");
  EXPECT_THROW(problem_formula(t.file.base, ProblemSpec::reachability({{"X9", "A"}})), std::invalid_argument);
  EXPECT_THROW(problem_formula(t.file.base, ProblemSpec::reachability({{"X2", "nope"}})), std::invalid_argument);
  EXPECT_THROW(problem_formula(t.file.base, ProblemSpec::reachability({})), std::invalid_argument);
}

TEST(Problems, DeductionProblemParts) {
  Instance t = load("thermo.frb");
  DeductionProblem dp = build_deduction_problem(t.file.base, t.e0, ProblemSpec::stability());
  EXPECT_EQ(dp.formulas.size(), 10 + t.file.base.rules.size() + t.file.base.variables.size());
  EXPECT_EQ(dp.clauses.size(), t.file.base.sets.size() * 5 + t.file.base.variables.size() * 5);
}

TEST(Lemma, HoldsOnTable9Instance) {
  Instance t = load("thermo.frb");
  LemmaChecker lc(t.file.base, t.e0, 13);
  ASSERT_TRUE(lc.premises_hold());
  for (std::size_t eta = 0; eta <= 13; ++eta) EXPECT_TRUE(lc.check(eta)) << "eta " << eta;
  EXPECT_THROW(lc.consequence_holds(14), std::invalid_argument);
}

TEST(Lemma, PerturbedModelFails) {
  Instance t = load("thermo.frb");
  Perturbation p{"X2", 3, 1, TruthValue(1, 3)};
  EXPECT_FALSE(derivation_consequence_check(t.file.base, t.e0, 5, 13, p));
  EXPECT_THROW(LemmaChecker(t.file.base, t.e0, 3, Perturbation{"X9", 1, 0, TruthValue(0)}), std::invalid_argument);
}

TEST(Reduction, HorizonBelowGoalDepthIsRejected) {
  Instance t = load("toy_b.frb");
  EXPECT_THROW(reduce_to_unsat(t.file.base, t.e0, ProblemSpec::cycle(3), 0, 2), std::invalid_argument);
  EXPECT_NO_THROW(reduce_to_unsat(t.file.base, t.e0, ProblemSpec::cycle(3), 0, 3));
}

TEST(Reduction, ClauseBlocksAndDomain) {
  Instance t = load("toy_a.frb");
  Reduction r = reduce_to_unsat(t.file.base, t.e0, ProblemSpec::stability(), 0, 2);
  EXPECT_EQ(r.domain.size(), 3u + t.file.base.universe.size());
  EXPECT_EQ(r.horizon, 2u);
  ASSERT_TRUE(r.refutation.goal);
  EXPECT_EQ(r.refutation.goal->root, (PredIndex{0, 0}));
  EXPECT_EQ(r.refutation.premises.members.front().root.i, 1u);
  const ClausalTheory sa = fuzzy_set_clauses(t.file.base);
  for (const auto& c : sa.clauses()) EXPECT_TRUE(r.clauses.contains(c)) << format_clause(c);
}

TEST(Reduction, ToyVerdictsAgreeWithAnalysis) {
  for (const char* name : {"toy_a.frb", "toy_b.frb"}) {
    Instance t = load(name);
    const RuleBase& b = t.file.base;
    std::vector<ProblemSpec> problems = {ProblemSpec::stability(), ProblemSpec::cycle(2)};
    for (const auto& s : b.sets) problems.push_back(ProblemSpec::reachability({{"X", s.name}}));
    for (std::size_t horizon = 2; horizon <= 3; ++horizon)
      for (const auto& p : problems) {
        Reduction r = reduce_to_unsat(b, t.e0, p, 0, horizon);
        const bool unsat = !solve(instantiate_reduction(r)).sat;
        EXPECT_EQ(unsat, holds_within(b, t.e0, p, horizon))
            << name << " horizon " << horizon << " problem " << format_formula(problem_formula(b, p));
      }
  }
}
