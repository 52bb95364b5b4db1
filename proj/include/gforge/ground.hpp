// Ground clausal theories over numbered atoms, and finite instantiation.
#pragma once

#include "gforge/clause.hpp"
#include "gforge/semantics.hpp"

#include <map>
#include <string>
#include <vector>

namespace gforge {

struct GSide {
  enum class Kind { Const, Atom, Inf, Sup };
  Kind kind = Kind::Const;
  TruthValue value;        // Const
  std::vector<int> atoms;  // one entry for Atom; the instances for Inf/Sup
};

struct GLiteral {
  GSide lhs;
  Rel rel;
  GSide rhs;
};

using GClause = std::vector<GLiteral>;

struct GroundTheory {
  std::vector<std::string> atoms;      // printed ground atoms, indexed by id
  std::vector<GClause> clauses;        // an empty clause makes the theory unsatisfiable
  std::vector<TruthValue> constants;   // C*: sorted, distinct, contains 0 and 1

  int atom_id(const std::string& printed);
  int find_atom(const std::string& printed) const;  // -1 when absent
  void add_constant(const TruthValue& v);

 private:
  std::map<std::string, int> index_;
};

// Requires a ground theory (no variables, no quantified atoms).
// Throws std::invalid_argument otherwise.
GroundTheory ground_theory(const ClausalTheory& s);

// Instantiates the free variables of every clause over `domain` and expands
// quantified atoms into an infimum/supremum over the same domain. Literals
// whose truth is fixed syntactically are folded away.
GroundTheory instantiate(const ClausalTheory& s, const std::vector<TermPtr>& domain);

// Value of a ground side under a total valuation of the atoms.
TruthValue side_value(const GSide& s, const std::vector<TruthValue>& valuation);
bool clause_true(const GClause& c, const std::vector<TruthValue>& valuation);
bool theory_true(const GroundTheory& t, const std::vector<TruthValue>& valuation);

// Herbrand-style model over a finite set of ground terms: function symbols
// build terms, atoms are looked up in a valuation of printed ground atoms.
class GroundAtomModel {
 public:
  using Element = TermPtr;

  GroundAtomModel(std::vector<TermPtr> domain, const std::map<std::string, int>* index,
                  const std::vector<TruthValue>* valuation)
      : domain_(std::move(domain)), index_(index), valuation_(valuation) {}

  const std::vector<TermPtr>& domain() const { return domain_; }
  TermPtr apply(const std::string& f, const std::vector<TermPtr>& args) const { return app(f, args); }
  TruthValue pred(const std::string& p, const std::vector<TermPtr>& args) const;

 private:
  std::vector<TermPtr> domain_;
  const std::map<std::string, int>* index_;
  const std::vector<TruthValue>* valuation_;
};

std::string format_ground_atom(const std::string& pred, const std::vector<TermPtr>& args);

// Ground atoms a formula can touch when its variables range over `domain`.
void collect_ground_atoms(const FormulaPtr& f, const std::vector<TermPtr>& domain, std::map<std::string, int>& index,
                          std::vector<std::string>& atoms);

}  // namespace gforge
