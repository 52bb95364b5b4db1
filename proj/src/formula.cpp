#include "gforge/formula.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gforge {

bool Formula::is_binary() const {
  switch (op) {
    case Op::And:
    case Op::Or:
    case Op::Imp:
    case Op::Iff:
    case Op::Eq:
    case Op::Prec:
      return true;
    default:
      return false;
  }
}

FormulaPtr atom(std::string pred, std::vector<TermPtr> args) {
  Formula f{Op::Atom, std::move(pred), std::move(args), TruthValue(0), nullptr, nullptr};
  return std::make_shared<const Formula>(std::move(f));
}

FormulaPtr constant(TruthValue v) {
  if (!v.in_unit_interval()) throw std::invalid_argument("truth constant " + v.str() + " outside [0,1]");
  return std::make_shared<const Formula>(Formula{Op::Const, {}, {}, v, nullptr, nullptr});
}

FormulaPtr neg(FormulaPtr f) {
  return std::make_shared<const Formula>(Formula{Op::Neg, {}, {}, TruthValue(0), std::move(f), nullptr});
}

FormulaPtr delta(FormulaPtr f) {
  return std::make_shared<const Formula>(Formula{Op::Delta, {}, {}, TruthValue(0), std::move(f), nullptr});
}

FormulaPtr binary(Op op, FormulaPtr a, FormulaPtr b) {
  Formula f{op, {}, {}, TruthValue(0), std::move(a), std::move(b)};
  if (!f.is_binary()) throw std::invalid_argument("binary(): not a binary connective");
  return std::make_shared<const Formula>(std::move(f));
}

FormulaPtr conj(FormulaPtr a, FormulaPtr b) { return binary(Op::And, std::move(a), std::move(b)); }
FormulaPtr disj(FormulaPtr a, FormulaPtr b) { return binary(Op::Or, std::move(a), std::move(b)); }
FormulaPtr imp(FormulaPtr a, FormulaPtr b) { return binary(Op::Imp, std::move(a), std::move(b)); }
FormulaPtr iff(FormulaPtr a, FormulaPtr b) { return binary(Op::Iff, std::move(a), std::move(b)); }
FormulaPtr eqc(FormulaPtr a, FormulaPtr b) { return binary(Op::Eq, std::move(a), std::move(b)); }
FormulaPtr prec(FormulaPtr a, FormulaPtr b) { return binary(Op::Prec, std::move(a), std::move(b)); }

FormulaPtr forall(std::string x, FormulaPtr body) {
  return std::make_shared<const Formula>(Formula{Op::Forall, std::move(x), {}, TruthValue(0), std::move(body), nullptr});
}

FormulaPtr exists(std::string x, FormulaPtr body) {
  return std::make_shared<const Formula>(Formula{Op::Exists, std::move(x), {}, TruthValue(0), std::move(body), nullptr});
}

namespace {

FormulaPtr nest_right(Op op, const std::vector<FormulaPtr>& parts, const TruthValue& unit) {
  if (parts.empty()) return constant(unit);
  FormulaPtr acc = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) acc = binary(op, *it, acc);
  return acc;
}

}  // namespace

FormulaPtr conj_all(const std::vector<FormulaPtr>& parts) { return nest_right(Op::And, parts, TruthValue(1)); }
FormulaPtr disj_all(const std::vector<FormulaPtr>& parts) { return nest_right(Op::Or, parts, TruthValue(0)); }

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->op != b->op) return false;
  switch (a->op) {
    case Op::Atom:
      if (a->name != b->name || a->args.size() != b->args.size()) return false;
      for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!term_equal(a->args[i], b->args[i])) return false;
      return true;
    case Op::Const:
      return a->value == b->value;
    case Op::Neg:
    case Op::Delta:
      return formula_equal(a->lhs, b->lhs);
    case Op::Forall:
    case Op::Exists:
      return a->name == b->name && formula_equal(a->lhs, b->lhs);
    default:
      return formula_equal(a->lhs, b->lhs) && formula_equal(a->rhs, b->rhs);
  }
}

std::size_t size(const FormulaPtr& f) {
  switch (f->op) {
    case Op::Atom: {
      std::size_t n = 1;
      for (const auto& t : f->args) n += size(t);
      return n;
    }
    case Op::Const:
      return 1;
    case Op::Neg:
    case Op::Delta:
      return 1 + size(f->lhs);
    case Op::Forall:
    case Op::Exists:
      return 2 + size(f->lhs);
    default:
      return 1 + size(f->lhs) + size(f->rhs);
  }
}

namespace {

void collect_varseq(const FormulaPtr& f, std::vector<std::string>& out) {
  switch (f->op) {
    case Op::Atom:
      for (const auto& t : f->args) term_vars(t, out);
      return;
    case Op::Const:
      return;
    case Op::Forall:
    case Op::Exists:
      out.push_back(f->name);
      collect_varseq(f->lhs, out);
      return;
    default:
      collect_varseq(f->lhs, out);
      if (f->rhs) collect_varseq(f->rhs, out);
  }
}

void collect_free(const FormulaPtr& f, std::vector<std::string>& bound, std::vector<std::string>& out) {
  switch (f->op) {
    case Op::Atom: {
      std::vector<std::string> vs;
      for (const auto& t : f->args) term_vars(t, vs);
      for (const auto& v : vs)
        if (std::find(bound.begin(), bound.end(), v) == bound.end()) out.push_back(v);
      return;
    }
    case Op::Const:
      return;
    case Op::Forall:
    case Op::Exists:
      bound.push_back(f->name);
      collect_free(f->lhs, bound, out);
      bound.pop_back();
      return;
    default:
      collect_free(f->lhs, bound, out);
      if (f->rhs) collect_free(f->rhs, bound, out);
  }
}

}  // namespace

std::vector<std::string> varseq(const FormulaPtr& f) {
  std::vector<std::string> out;
  collect_varseq(f, out);
  return out;
}

std::vector<std::string> dedup_preserving_first_occurrence(const std::vector<std::string>& xs) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& x : xs)
    if (seen.insert(x).second) out.push_back(x);
  return out;
}

std::vector<std::string> free_vars(const FormulaPtr& f) {
  std::vector<std::string> bound;
  std::vector<std::string> out;
  collect_free(f, bound, out);
  return dedup_preserving_first_occurrence(out);
}

bool is_closed(const FormulaPtr& f) { return free_vars(f).empty(); }

bool is_quantified_atom(const FormulaPtr& f) {
  if (!f->is_quantifier() || !f->lhs->is_atom()) return false;
  const std::string& x = f->name;
  bool found = false;
  for (const auto& t : f->lhs->args) {
    if (t->is_var() && t->name == x) {
      found = true;
    } else if (occurs(x, t)) {
      return false;
    }
  }
  return found;
}

namespace {

FormulaPtr subst(const FormulaPtr& f, const std::map<std::string, TermPtr>& b) {
  switch (f->op) {
    case Op::Atom: {
      std::vector<TermPtr> args;
      args.reserve(f->args.size());
      for (const auto& t : f->args) args.push_back(substitute(t, b));
      return atom(f->name, std::move(args));
    }
    case Op::Const:
      return f;
    case Op::Neg:
      return neg(subst(f->lhs, b));
    case Op::Delta:
      return delta(subst(f->lhs, b));
    case Op::Forall:
    case Op::Exists: {
      if (b.count(f->name)) {
        auto inner = b;
        inner.erase(f->name);
        FormulaPtr body = subst(f->lhs, inner);
        return f->op == Op::Forall ? forall(f->name, body) : exists(f->name, body);
      }
      FormulaPtr body = subst(f->lhs, b);
      return f->op == Op::Forall ? forall(f->name, body) : exists(f->name, body);
    }
    default:
      return binary(f->op, subst(f->lhs, b), subst(f->rhs, b));
  }
}

}  // namespace

FormulaPtr substitute(const FormulaPtr& f, const std::map<std::string, TermPtr>& bindings) {
  if (bindings.empty()) return f;
  auto fv = free_vars(f);
  auto all = varseq(f);
  for (const auto& [x, t] : bindings) {
    if (!is_ground(t)) throw std::invalid_argument("substitute: term for '" + x + "' is not closed");
    bool is_free = std::find(fv.begin(), fv.end(), x) != fv.end();
    bool occurs_at_all = std::find(all.begin(), all.end(), x) != all.end();
    if (occurs_at_all && !is_free)
      throw std::invalid_argument("substitute: variable '" + x + "' occurs only bound");
  }
  return subst(f, bindings);
}

void collect_constants(const FormulaPtr& f, std::vector<TruthValue>& out) {
  switch (f->op) {
    case Op::Atom:
      return;
    case Op::Const:
      if (std::find(out.begin(), out.end(), f->value) == out.end()) out.push_back(f->value);
      return;
    default:
      collect_constants(f->lhs, out);
      if (f->rhs) collect_constants(f->rhs, out);
  }
}

const char* op_symbol(Op op) {
  switch (op) {
    case Op::Neg: return "!";
    case Op::Delta: return "D";
    case Op::And: return "&";
    case Op::Or: return "|";
    case Op::Imp: return "->";
    case Op::Iff: return "<->";
    case Op::Eq: return "~";
    case Op::Prec: return "<";
    case Op::Forall: return "forall";
    case Op::Exists: return "exists";
    default: return "";
  }
}

namespace {

// Binding strength, loosest first: <-> (left), -> (right), | (right),
// & (right), ~ < (non-associative), then unary forms and leaves.
int level(Op op) {
  switch (op) {
    case Op::Iff: return 1;
    case Op::Imp: return 2;
    case Op::Or: return 3;
    case Op::And: return 4;
    case Op::Eq:
    case Op::Prec: return 5;
    default: return 6;
  }
}

std::string fmt(const FormulaPtr& f, int need);

std::string fmt_child(const FormulaPtr& f, int need) {
  std::string s = fmt(f, need);
  return level(f->op) < need ? "(" + s + ")" : s;
}

std::string fmt(const FormulaPtr& f, int /*need*/) {
  switch (f->op) {
    case Op::Atom: {
      if (f->args.empty()) return f->name;
      std::string s = f->name + "(";
      for (std::size_t i = 0; i < f->args.size(); ++i) {
        if (i) s += ",";
        s += format_term(f->args[i]);
      }
      return s + ")";
    }
    case Op::Const:
      return f->value.str();
    case Op::Neg:
      return "!" + fmt_child(f->lhs, 6);
    case Op::Delta:
      return "D " + fmt_child(f->lhs, 6);
    case Op::Forall:
    case Op::Exists:
      return std::string(op_symbol(f->op)) + " " + f->name + " " + fmt_child(f->lhs, 6);
    default: {
      int l = level(f->op);
      int left_need = l + 1;
      int right_need = l;
      if (f->op == Op::Iff) {
        left_need = l;
        right_need = l + 1;
      } else if (f->op == Op::Eq || f->op == Op::Prec) {
        right_need = l + 1;
      }
      return fmt_child(f->lhs, left_need) + " " + op_symbol(f->op) + " " + fmt_child(f->rhs, right_need);
    }
  }
}

}  // namespace

std::string format_formula(const FormulaPtr& f) { return fmt(f, 0); }

}  // namespace gforge
