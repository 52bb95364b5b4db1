// Translation of rule bases, assignments and derivation problems into
// Goedel logic, and their reduction to clausal unsatisfiability.
//
// Vocabulary: numerals over $z, $s, frac, nfrac; domain predicates nat, rat,
// time, uni; $G.<set>(u) for fuzzy sets, $H.<var>(t,u) for variable values
// at time t and $Hr.<label>.<var>(t,u) for single rule outputs. The time
// variable is `tau`.
#pragma once

#include "gforge/clause.hpp"
#include "gforge/clausifier.hpp"
#include "gforge/formula.hpp"
#include "gforge/fuzzy.hpp"
#include "gforge/ground.hpp"
#include "gforge/oracle.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gforge {

inline const std::string kTimeVar = "tau";

// ---- numerals

struct Numeral {
  enum class Kind { Nat, Frac, NegFrac };
  Kind kind = Kind::Nat;
  std::int64_t m = 0;  // the natural value, or the numerator
  std::int64_t n = 0;  // the denominator (unused for Nat)

  Rational value() const;
  TermPtr term() const;
};

TermPtr nat_numeral(std::size_t n);                 // $s^n($z)
TermPtr succ_power(const TermPtr& t, std::size_t k);  // $s^k(t)
// frac(m,n) for q >= 0 and nfrac(-m,n) for q < 0, in lowest terms.
TermPtr rational_numeral(const Rational& q);
std::optional<Numeral> decode_numeral(const TermPtr& t);

// ---- translations

// T_D for the function symbols of `sig` (which must include the numeral
// symbols). Closed-world instances use the variables v1, v2, ...
std::vector<FormulaPtr> domain_axioms(const Signature& sig);

// S_U: the unit clauses uni(u)~1 for the universe numerals, with the
// cofinite part uni(t)~0 produced on demand.
class UniverseClauses {
 public:
  explicit UniverseClauses(const UniverseSpec& u);

  const std::vector<TermPtr>& members() const { return members_; }
  const ClausalTheory& positive() const { return positive_; }
  std::optional<std::size_t> member_index(const TermPtr& t) const;
  TruthValue value(const TermPtr& t) const;
  OrderClause clause_for(const TermPtr& t) const;
  // Positive part plus the closed-world clause for every term in `terms`.
  ClausalTheory instantiate(const std::vector<TermPtr>& terms) const;

 private:
  std::vector<TermPtr> members_;
  ClausalTheory positive_;
};

ClausalTheory fuzzy_set_clauses(const RuleBase& b);                               // S_A
ClausalTheory assignment_clauses(const RuleBase& b, const FuzzyAssignment& e);  // S_e, tau free

FormulaPtr rule_formula(const FuzzyRule& r);
FormulaPtr aggregation_formula(const RuleBase& b, const std::string& x);
std::vector<FormulaPtr> base_theory(const RuleBase& b);  // T_B: rules, then one aggregation per variable

struct ProblemSpec {
  enum class Kind { Reachability, Stability, KCycle };
  Kind kind = Kind::Stability;
  std::vector<Antecedent> targets;  // Reachability
  std::size_t k = 1;                // KCycle

  static ProblemSpec reachability(std::vector<Antecedent> targets);
  static ProblemSpec stability();
  static ProblemSpec cycle(std::size_t k);
};

FormulaPtr problem_formula(const RuleBase& b, const ProblemSpec& p);

// Working signature: the numeral symbols only.
Signature working_signature();

struct DeductionProblem {
  std::vector<FormulaPtr> formulas;  // T_D then T_B
  ClausalTheory clauses;             // S_A then S_e0(tau/$z)
  UniverseClauses universe;          // S_U
  FormulaPtr goal;
};

DeductionProblem build_deduction_problem(const RuleBase& b, const FuzzyAssignment& e0, const ProblemSpec& p);

// ---- lemma check at desk scale

struct Perturbation {
  std::string var;
  std::size_t time = 0;
  std::size_t element = 0;
  TruthValue value;
};

// Builds the canonical model of derive(b, e0, t_max + 1) over the time
// numerals 0..t_max and the universe numerals, checks the premises
// T_D, S_U, S_A, T_B, S_e0(tau/$z) in it once, and then checks
// S_{e_eta}(tau/$s^eta($z)) against an independently derived e_eta.
class LemmaChecker {
 public:
  LemmaChecker(const RuleBase& b, const FuzzyAssignment& e0, std::size_t t_max,
               const std::optional<Perturbation>& perturb = std::nullopt);
  ~LemmaChecker();
  LemmaChecker(const LemmaChecker&) = delete;
  LemmaChecker& operator=(const LemmaChecker&) = delete;

  bool premises_hold() const { return premises_hold_; }
  // Throws std::invalid_argument for eta > t_max.
  bool consequence_holds(std::size_t eta) const;
  bool check(std::size_t eta) const { return premises_hold_ && consequence_holds(eta); }

 private:
  struct Impl;
  const RuleBase& b_;
  FuzzyAssignment e0_;
  std::size_t t_max_;
  Impl* impl_;
  bool premises_hold_ = false;
};

bool derivation_consequence_check(const RuleBase& b, const FuzzyAssignment& e0, std::size_t eta, std::size_t t_max,
                                  const std::optional<Perturbation>& perturb = std::nullopt);

// ---- reduction to unsatisfiability

struct Reduction {
  ClausalTheory clauses;         // S_D, S_U (positive), S_A, S_B, S_e0(tau/$z), goal block
  RefutationInput refutation;    // the clausified premises and goal
  std::vector<TermPtr> domain;   // finite instantiation: time numerals 0..horizon, universe numerals
  std::size_t horizon = 0;
  std::size_t n0 = 0;
};

// Throws std::invalid_argument when the horizon is smaller than the
// successor depth required by the goal.
Reduction reduce_to_unsat(const RuleBase& b, const FuzzyAssignment& e0, const ProblemSpec& p, std::size_t n0,
                          std::size_t horizon);

// Instantiates the reduction over its domain and adds the closed-world
// value of every ground nat/rat/time/uni atom.
GroundTheory instantiate_reduction(const Reduction& r);

}  // namespace gforge
