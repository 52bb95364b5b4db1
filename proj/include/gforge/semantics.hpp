// Evaluation of formulas and order clauses in finite structures.
#pragma once

#include "gforge/clause.hpp"
#include "gforge/formula.hpp"
#include "gforge/truth_value.hpp"

#include <concepts>
#include <optional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gforge {

// A structure with a finite quantifier domain. Element is the carrier type.
template <class M>
concept Model = requires(const M& m, const std::string& s, const std::vector<typename M::Element>& args) {
  typename M::Element;
  { m.domain() } -> std::convertible_to<const std::vector<typename M::Element>&>;
  { m.apply(s, args) } -> std::convertible_to<typename M::Element>;
  { m.pred(s, args) } -> std::convertible_to<TruthValue>;
};

template <class M>
using Env = std::map<std::string, typename M::Element>;

template <Model M>
typename M::Element eval_term(const TermPtr& t, const M& m, const Env<M>& e) {
  if (t->is_var()) {
    auto it = e.find(t->name);
    if (it == e.end()) throw std::invalid_argument("unassigned variable '" + t->name + "'");
    return it->second;
  }
  std::vector<typename M::Element> args;
  args.reserve(t->args.size());
  for (const auto& a : t->args) args.push_back(eval_term(a, m, e));
  return m.apply(t->name, args);
}

// Truth value under the standard Goedel algebra. Quantifiers range over
// m.domain(); the environment is restored before returning.
template <Model M>
TruthValue eval_formula(const FormulaPtr& f, const M& m, Env<M>& e) {
  switch (f->op) {
    case Op::Atom: {
      std::vector<typename M::Element> args;
      args.reserve(f->args.size());
      for (const auto& a : f->args) args.push_back(eval_term(a, m, e));
      return m.pred(f->name, args);
    }
    case Op::Const:
      return f->value;
    case Op::Neg:
      return g::negation(eval_formula(f->lhs, m, e));
    case Op::Delta:
      return g::delta(eval_formula(f->lhs, m, e));
    case Op::And: {
      TruthValue a = eval_formula(f->lhs, m, e);
      if (a.is_zero()) return a;
      return g::inf(a, eval_formula(f->rhs, m, e));
    }
    case Op::Or: {
      TruthValue a = eval_formula(f->lhs, m, e);
      if (a.is_one()) return a;
      return g::sup(a, eval_formula(f->rhs, m, e));
    }
    case Op::Imp: {
      TruthValue a = eval_formula(f->lhs, m, e);
      if (a.is_zero()) return TruthValue(1);
      return g::residuum(a, eval_formula(f->rhs, m, e));
    }
    case Op::Iff:
      return g::biresiduum(eval_formula(f->lhs, m, e), eval_formula(f->rhs, m, e));
    case Op::Eq:
      return g::eqcirc(eval_formula(f->lhs, m, e), eval_formula(f->rhs, m, e));
    case Op::Prec:
      return g::prec(eval_formula(f->lhs, m, e), eval_formula(f->rhs, m, e));
    case Op::Forall:
    case Op::Exists: {
      const bool all = f->op == Op::Forall;
      auto saved = e.find(f->name);
      std::optional<typename M::Element> old;
      if (saved != e.end()) old = saved->second;
      TruthValue acc(all ? 1 : 0);
      for (const auto& u : m.domain()) {
        e.insert_or_assign(f->name, u);
        TruthValue v = eval_formula(f->lhs, m, e);
        acc = all ? g::inf(acc, v) : g::sup(acc, v);
        if (all ? acc.is_zero() : acc.is_one()) break;
      }
      if (old)
        e.insert_or_assign(f->name, *old);
      else
        e.erase(f->name);
      return acc;
    }
  }
  throw std::logic_error("eval_formula: unknown connective");
}

template <Model M>
TruthValue eval_literal(const OrderLiteral& l, const M& m, Env<M>& e) {
  TruthValue a = eval_formula(l.lhs, m, e);
  TruthValue b = eval_formula(l.rhs, m, e);
  return l.rel == Rel::Eq ? g::eqcirc(a, b) : g::prec(a, b);
}

namespace detail {

template <Model M, class Visit>
bool for_all_assignments(const std::vector<std::string>& vars, std::size_t k, const M& m, Env<M>& e, Visit&& visit) {
  if (k == vars.size()) return visit(e);
  for (const auto& u : m.domain()) {
    e.insert_or_assign(vars[k], u);
    if (!for_all_assignments(vars, k + 1, m, e, visit)) return false;
  }
  return true;
}

std::vector<std::string> clause_free_vars(const OrderClause& c);

}  // namespace detail

// True iff the formula takes value 1 under every assignment of its free
// variables.
template <Model M>
bool holds(const FormulaPtr& f, const M& m) {
  Env<M> e;
  return detail::for_all_assignments(free_vars(f), 0, m, e,
                                     [&](Env<M>& env) { return eval_formula(f, m, env).is_one(); });
}

template <Model M>
bool satisfies(const M& m, const OrderClause& c) {
  Env<M> e;
  return detail::for_all_assignments(detail::clause_free_vars(c), 0, m, e, [&](Env<M>& env) {
    for (const auto& l : c.literals())
      if (eval_literal(l, m, env).is_one()) return true;
    return false;
  });
}

template <Model M>
bool satisfies(const M& m, const ClausalTheory& s) {
  for (const auto& c : s.clauses())
    if (!satisfies(m, c)) return false;
  return true;
}

// A finite interpretation over elements 0..n-1 with explicit tables.
class Interpretation {
 public:
  using Element = int;

  explicit Interpretation(int universe_size);

  void set_function(const std::string& f, const std::vector<int>& args, int value);
  void set_predicate(const std::string& p, const std::vector<int>& args, const TruthValue& value);

  const std::vector<int>& domain() const { return universe_; }
  int apply(const std::string& f, const std::vector<int>& args) const;
  TruthValue pred(const std::string& p, const std::vector<int>& args) const;

 private:
  std::vector<int> universe_;
  std::map<std::string, std::map<std::vector<int>, int>> functions_;
  std::map<std::string, std::map<std::vector<int>, TruthValue>> predicates_;
};

using ValueAssignment = std::map<std::string, int>;

TruthValue eval_truth(const FormulaPtr& f, const Interpretation& i, const ValueAssignment& e = {});
bool check_model(const Interpretation& i, const ClausalTheory& s);

}  // namespace gforge
