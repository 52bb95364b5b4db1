// Formulas of first-order Goedel logic with truth constants.
#pragma once

#include "gforge/term.hpp"
#include "gforge/truth_value.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace gforge {

enum class Op { Atom, Const, Neg, Delta, And, Or, Imp, Iff, Eq, Prec, Forall, Exists };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable AST node. Atom uses name/args, Const uses value, Neg/Delta use
// lhs, binary connectives use lhs/rhs, quantifiers bind `name` over lhs.
struct Formula {
  Op op;
  std::string name;
  std::vector<TermPtr> args;
  TruthValue value;
  FormulaPtr lhs;
  FormulaPtr rhs;

  bool is_atom() const { return op == Op::Atom; }
  bool is_const() const { return op == Op::Const; }
  bool is_const(const TruthValue& v) const { return op == Op::Const && value == v; }
  bool is_binary() const;
  bool is_quantifier() const { return op == Op::Forall || op == Op::Exists; }
};

FormulaPtr atom(std::string pred, std::vector<TermPtr> args = {});
FormulaPtr constant(TruthValue v);
FormulaPtr neg(FormulaPtr f);
FormulaPtr delta(FormulaPtr f);
FormulaPtr binary(Op op, FormulaPtr a, FormulaPtr b);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr imp(FormulaPtr a, FormulaPtr b);
FormulaPtr iff(FormulaPtr a, FormulaPtr b);
FormulaPtr eqc(FormulaPtr a, FormulaPtr b);
FormulaPtr prec(FormulaPtr a, FormulaPtr b);
FormulaPtr forall(std::string x, FormulaPtr body);
FormulaPtr exists(std::string x, FormulaPtr body);

// Right-nested conjunction/disjunction; an empty list yields 1 (resp. 0).
FormulaPtr conj_all(const std::vector<FormulaPtr>& parts);
FormulaPtr disj_all(const std::vector<FormulaPtr>& parts);

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

std::size_t size(const FormulaPtr& f);

// Variable occurrences in left-right preorder (bound and free alike).
std::vector<std::string> varseq(const FormulaPtr& f);
std::vector<std::string> dedup_preserving_first_occurrence(const std::vector<std::string>& xs);
std::vector<std::string> free_vars(const FormulaPtr& f);  // first-occurrence order
bool is_closed(const FormulaPtr& f);

// Qx p(t0..tn) with x occurring and every ti either exactly x or x-free.
bool is_quantified_atom(const FormulaPtr& f);

// Replaces free occurrences; bindings must be closed terms, so capture is
// impossible. Throws if a bound variable is named that has no free occurrence.
FormulaPtr substitute(const FormulaPtr& f, const std::map<std::string, TermPtr>& bindings);

// Truth constants occurring in f.
void collect_constants(const FormulaPtr& f, std::vector<TruthValue>& out);

// Concrete syntax with minimal parentheses.
std::string format_formula(const FormulaPtr& f);

const char* op_symbol(Op op);

}  // namespace gforge
