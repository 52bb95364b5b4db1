// Translation of formulas and finite theories to order clausal form by
// interpolation with fresh predicates $p.i.j(x1,...,xn).
#pragma once

#include "gforge/clause.hpp"
#include "gforge/formula.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace gforge {

struct PredIndex {
  std::size_t i = 0;
  std::size_t j = 0;
  friend auto operator<=>(const PredIndex&, const PredIndex&) = default;
};

// Interpolation rules. The numeric values are the labels printed by the
// trace; Leaf is the base case.
enum class Rule {
  Leaf = 0,
  And = 14,
  Or = 15,
  Imp = 16,
  Iff = 17,
  Eq = 18,
  Prec = 19,
  ImpZero = 20,
  EqZero = 21,
  EqOne = 22,
  ZeroPrec = 23,
  PrecOne = 24,
  Forall = 25,
  Exists = 26,
};

const char* rule_name(Rule r);

struct TraceStep {
  Rule rule;
  PredIndex at;
  FormulaPtr subformula;
};

std::string format_trace_step(const TraceStep& s);

struct TranslationResult {
  enum class Kind { Clauses, EmptyClause, Empty };
  Kind kind = Kind::Clauses;
  ClausalTheory clauses;
  std::vector<PredIndex> fresh;  // allocated indices in allocation order
  PredIndex root;
  std::vector<std::string> shared_vars;  // the argument vector of every fresh atom
  std::size_t last_j = 0;                // n_J: the largest j allocated
  std::vector<TraceStep> trace;          // preorder
};

FormulaPtr fresh_atom(PredIndex k, const std::vector<std::string>& xs);

// theta must be a non-constant normal form (see simplify) whose variables
// all occur in xs. The result's fresh set excludes `start`. Throws
// std::invalid_argument on a precondition violation and std::logic_error
// if a size certificate fails.
TranslationResult interpolate(const FormulaPtr& theta, const std::vector<std::string>& xs, PredIndex start);

// Simplifies phi and pins the root to 1. Returns Kind::EmptyClause when phi
// folds to a constant below 1 and Kind::Empty when it folds to 1. The
// argument vector defaults to the deduplicated variable sequence of the
// simplified formula.
TranslationResult clausify_positive(const FormulaPtr& phi, std::size_t offset,
                                    const std::optional<std::vector<std::string>>& xs = std::nullopt);

struct TheoryTranslation {
  ClausalTheory clauses;
  std::vector<TranslationResult> members;  // in input order, offsets n0, n0+1, ...
  bool has_empty_clause = false;
};

TheoryTranslation clausify_theory(const std::vector<FormulaPtr>& theory, std::size_t n0);

struct RefutationInput {
  ClausalTheory clauses;
  TheoryTranslation premises;                // offsets n0+1, n0+2, ...
  std::optional<TranslationResult> goal;     // rooted at (n0,0); absent in the degenerate cases
};

// T entails phi iff the returned theory is unsatisfiable.
RefutationInput build_refutation_input(const std::vector<FormulaPtr>& theory, const FormulaPtr& phi, std::size_t n0);

// Size certificates for a single translation.
struct SizeReport {
  std::size_t theta_size = 0;
  std::size_t xs_size = 0;
  std::size_t fresh = 0;
  std::size_t clause_size = 0;
  bool interpolation_ok = false;  // fresh <= |theta|-1 and clause_size <= 27|theta|(1+|xs|)
};

SizeReport size_report(const FormulaPtr& theta, const TranslationResult& r);

// True iff some bijection between the fresh predicates of a and b maps the
// clause set of a onto the clause set of b.
bool isomorphic_up_to_fresh_renaming(const ClausalTheory& a, const ClausalTheory& b);

}  // namespace gforge
