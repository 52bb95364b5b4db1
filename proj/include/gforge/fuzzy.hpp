// Mamdani-Assilian fuzzy sets, rules and multi-step derivations over a
// finite universe with exact rational memberships.
#pragma once

#include "gforge/truth_value.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gforge {

// The universe is declared directly as a list of distinct rationals.
class UniverseSpec {
 public:
  UniverseSpec() = default;
  explicit UniverseSpec(std::vector<Rational> elements);  // throws on empty or duplicate

  const std::vector<Rational>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::optional<std::size_t> index_of(const Rational& u) const;

  friend bool operator==(const UniverseSpec&, const UniverseSpec&) = default;

 private:
  std::vector<Rational> elements_;
};

// Membership degrees in universe order.
using Membership = std::vector<TruthValue>;

struct FuzzySet {
  std::string name;
  Membership membership;
};

Membership constant_set(std::size_t n, const TruthValue& c);

TruthValue height(const Membership& a);
Membership cut(const TruthValue& c, const Membership& a);
Membership set_union(const Membership& a, const Membership& b);      // throws on size mismatch
Membership set_intersect(const Membership& a, const Membership& b);  // throws on size mismatch

// "(1 0.5 0 0 0)"
std::string format_membership(const Membership& m);

struct Antecedent {
  std::string var;
  std::string set;
};

struct FuzzyRule {
  std::string label;
  std::vector<Antecedent> antecedents;  // non-empty
  Antecedent consequent;
};

class RuleBase {
 public:
  UniverseSpec universe;
  std::vector<FuzzySet> sets;          // declaration order
  std::vector<std::string> variables;  // declaration order
  std::vector<FuzzyRule> rules;        // declaration order

  // Throws std::invalid_argument when a rule or set is ill-formed.
  void validate() const;

  const FuzzySet& set(const std::string& name) const;  // throws std::out_of_range
  bool has_set(const std::string& name) const;
  std::size_t var_index(const std::string& name) const;  // throws std::out_of_range
  bool has_var(const std::string& name) const;

  // A copy without the rules whose labels are listed.
  RuleBase without_rules(const std::vector<std::string>& labels) const;
};

// One membership vector per variable, in RuleBase::variables order.
using FuzzyAssignment = std::vector<Membership>;

// Looks up set names; throws std::invalid_argument on an unknown variable or
// set, or when a variable is left unassigned.
FuzzyAssignment make_assignment(const RuleBase& b, const std::map<std::string, std::string>& var_to_set);

// Firing degree min_i height(e(X_i) & A_i).
TruthValue firing_degree(const RuleBase& b, const FuzzyRule& r, const FuzzyAssignment& e);
Membership eval_rule(const RuleBase& b, const FuzzyRule& r, const FuzzyAssignment& e);
// Pointwise max over the rules producing X; the constant-0 set when none does.
Membership eval_var(const RuleBase& b, const FuzzyAssignment& e, const std::string& x);
FuzzyAssignment step(const RuleBase& b, const FuzzyAssignment& e);

struct Derivation {
  std::vector<FuzzyAssignment> states;  // e_0 .. e_eta
  std::size_t eta() const { return states.size() - 1; }
};

// Asserts value closure at every step: each derived membership is one of the
// degrees occurring in the sets or in e0 (std::logic_error otherwise).
Derivation derive(const RuleBase& b, const FuzzyAssignment& e0, std::size_t horizon);

// "12: ((1 0.5 1 0.5 1) (...) ...)"
std::string format_state(const FuzzyAssignment& e);

}  // namespace gforge
