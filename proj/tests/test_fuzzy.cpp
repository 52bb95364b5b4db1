#include "gforge/analysis.hpp"
#include "gforge/frb_parser.hpp"
#include "gforge/fuzzy.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace gforge;

namespace {

const char* kToy = R"(
universe 0 1 2;
set lo = 1/0 0.5/1 0/2;
set hi = 0/0 0.5/1 1/2;
set mid = 0/0 1/1 0/2;
var X Y;
rule R1: if X is lo then Y is hi;
rule R2: if X is hi and Y is hi then X is mid;
init X = lo, Y = mid;
target Y = hi;
)";

Membership m(std::initializer_list<const char*> xs) {
  Membership out;
  for (const char* x : xs) out.push_back(TruthValue::parse(x));
  return out;
}

// The state rows of a golden table file, without the "k:" prefix.
std::vector<std::string> table_rows(const std::string& name) {
  std::vector<std::string> rows;
  std::istringstream in(check::read_text(check::data_path(name)));
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) rows.push_back(line.substr(line.find(": ") + 2));
  return rows;
}

}  // namespace

TEST(FuzzySets, Operations) {
  Membership a = m({"1", "0.5", "0"}), b = m({"0", "0.5", "1"});
  EXPECT_EQ(height(a), TruthValue(1));
  EXPECT_EQ(height(set_intersect(a, b)), TruthValue(1, 2));
  EXPECT_EQ(set_union(a, b), m({"1", "0.5", "1"}));
  EXPECT_EQ(cut(TruthValue(1, 2), a), m({"0.5", "0.5", "0"}));
  EXPECT_EQ(constant_set(2, TruthValue(0)), m({"0", "0"}));
  EXPECT_THROW(set_union(a, m({"1"})), std::invalid_argument);
  EXPECT_EQ(format_membership(a), "(1 0.5 0)");
}

TEST(FrbParser, ParsesToy) {
  FrbFile f = parse_frb(kToy);
  EXPECT_EQ(f.base.universe.size(), 3u);
  EXPECT_EQ(f.base.sets.size(), 3u);
  EXPECT_EQ(f.base.rules.size(), 2u);
  EXPECT_EQ(f.base.rules[1].antecedents.size(), 2u);
  EXPECT_EQ(f.init.at("Y"), "mid");
  ASSERT_EQ(f.targets.size(), 1u);
  EXPECT_EQ(f.targets[0], (std::pair<std::string, std::string>{"Y", "hi"}));
}

TEST(FrbParser, ReportsLines) {
  try {
    parse_frb("universe 0 1;\nset a = 1/0 1/1;\nvar X;\nrule R1: if X is b then X is a;\n");
    FAIL() << "unknown set accepted";
  } catch (const FrbError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  EXPECT_THROW(parse_frb("universe 0 0;"), FrbError);
  EXPECT_THROW(parse_frb("universe 0 1;\nset a = 2/0 1/1;"), FrbError);
  EXPECT_THROW(parse_frb("universe 0 1;\nset a = 1/0;"), FrbError);
  EXPECT_THROW(parse_frb("universe 0 1;\nset a = 1/0 1/1;\nvar X;\nrule R1 if X is a then X is a;"), FrbError);
}

// Hand evaluation: R1 fires at height(lo ^ lo) = 1 and yields hi; R2 fires
// at min(height(lo ^ hi), height(mid ^ hi)) = 0.5 and yields mid cut at 0.5.
TEST(Engine, MamdaniStep) {
  FrbFile f = parse_frb(kToy);
  FuzzyAssignment e0 = make_assignment(f.base, f.init);
  EXPECT_EQ(firing_degree(f.base, f.base.rules[0], e0), TruthValue(1));
  EXPECT_EQ(firing_degree(f.base, f.base.rules[1], e0), TruthValue(1, 2));
  FuzzyAssignment e1 = step(f.base, e0);
  EXPECT_EQ(e1[f.base.var_index("X")], m({"0", "0.5", "0"}));
  EXPECT_EQ(e1[f.base.var_index("Y")], m({"0", "0.5", "1"}));
}

TEST(Engine, VariableWithoutRuleBecomesEmpty) {
  FrbFile f = parse_frb("universe 0 1;\nset a = 1/0 1/1;\nvar X Y;\nrule R1: if X is a then X is a;\ninit X=a, Y=a;");
  FuzzyAssignment e1 = step(f.base, make_assignment(f.base, f.init));
  EXPECT_EQ(e1[f.base.var_index("Y")], m({"0", "0"}));
}

TEST(Engine, WithoutRules) {
  FrbFile f = load_frb(check::data_path("thermo.frb"));
  RuleBase b = f.base.without_rules({"R7", "R8"});
  EXPECT_EQ(b.rules.size(), f.base.rules.size() - 2);
  FrbFile g = load_frb(check::data_path("thermo-noB7B8.frb"));
  Derivation d1 = derive(b, make_assignment(b, f.init), 17);
  Derivation d2 = derive(g.base, make_assignment(g.base, g.init), 17);
  EXPECT_EQ(d1.states, d2.states);
}

TEST(Engine, ThermostatMatchesTable9) {
  FrbFile f = load_frb(check::data_path("thermo.frb"));
  EXPECT_EQ(f.base.rules.size(), 62u);
  Derivation d = derive(f.base, make_assignment(f.base, f.init), 13);
  auto rows = table_rows("table9_printed.txt");
  ASSERT_EQ(rows.size(), 14u);
  for (std::size_t k = 0; k < rows.size(); ++k) EXPECT_EQ(format_state(d.states[k]), rows[k]) << "row " << k;
}

TEST(Engine, DerivationIsDeterministic) {
  FrbFile f = load_frb(check::data_path("thermo.frb"));
  FuzzyAssignment e0 = make_assignment(f.base, f.init);
  EXPECT_EQ(derive(f.base, e0, 20).states, derive(f.base, e0, 20).states);
}

TEST(Analysis, ToyQuestions) {
  FrbFile f = parse_frb(kToy);
  FuzzyAssignment e0 = make_assignment(f.base, f.init);
  Derivation d = derive(f.base, e0, 6);
  // e1: X=(0 .5 0), Y=(0 .5 1); e2: R1 fires at 0.5, R2 at 0.5.
  auto reach = check_reachability(f.base, d, {{"Y", f.base.set("hi").membership}});
  ASSERT_TRUE(reach);
  EXPECT_EQ(*reach, 1u);
  EventualCycle ec = detect_eventual_cycle(f.base, e0);
  auto stable = check_stability(d);
  if (ec.period == 1) {
    ASSERT_TRUE(stable);
    EXPECT_EQ(*stable, ec.prefix);
  } else {
    EXPECT_FALSE(stable);
  }
}

TEST(Analysis, CycleDetectionAgreesWithBruteForce) {
  FrbFile f = load_frb(check::data_path("thermo-noB7B8.frb"));
  FuzzyAssignment e0 = make_assignment(f.base, f.init);
  Derivation d = derive(f.base, e0, 40);
  // Least (mu, lambda) with e_mu = e_{mu+lambda}, by direct search.
  std::size_t mu = 0, lambda = 0;
  for (std::size_t j = 1; j < d.states.size() && !lambda; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (d.states[i] == d.states[j]) {
        mu = i;
        lambda = j - i;
        break;
      }
  ASSERT_GT(lambda, 0u);
  EventualCycle ec = detect_eventual_cycle(f.base, e0);
  EXPECT_EQ(ec.prefix, mu);
  EXPECT_EQ(ec.period, lambda);
  EXPECT_EQ(find_k_cycle(d, 12), std::optional<std::size_t>(5));
  EXPECT_FALSE(check_stability(d));
}
