#include "gforge/ground.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace gforge {

int GroundTheory::atom_id(const std::string& printed) {
  auto [it, inserted] = index_.emplace(printed, static_cast<int>(atoms.size()));
  if (inserted) atoms.push_back(printed);
  return it->second;
}

int GroundTheory::find_atom(const std::string& printed) const {
  auto it = index_.find(printed);
  return it == index_.end() ? -1 : it->second;
}

void GroundTheory::add_constant(const TruthValue& v) {
  auto it = std::lower_bound(constants.begin(), constants.end(), v);
  if (it == constants.end() || *it != v) constants.insert(it, v);
}

std::string format_ground_atom(const std::string& pred, const std::vector<TermPtr>& args) {
  if (args.empty()) return pred;
  std::string s = pred + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ",";
    s += format_term(args[i]);
  }
  return s + ")";
}

namespace {

std::string instance(const FormulaPtr& a, const std::map<std::string, TermPtr>& b) {
  std::vector<TermPtr> args;
  args.reserve(a->args.size());
  for (const auto& t : a->args) {
    TermPtr s = substitute(t, b);
    if (!is_ground(s)) throw std::invalid_argument("atom " + format_formula(a) + " is not ground after instantiation");
    args.push_back(std::move(s));
  }
  return format_ground_atom(a->name, args);
}

GSide make_side(const FormulaPtr& f, std::map<std::string, TermPtr>& b, const std::vector<TermPtr>& domain,
                GroundTheory& out) {
  GSide s;
  if (f->is_const()) {
    s.kind = GSide::Kind::Const;
    s.value = f->value;
    out.add_constant(f->value);
    return s;
  }
  if (f->is_atom()) {
    s.kind = GSide::Kind::Atom;
    s.atoms.push_back(out.atom_id(instance(f, b)));
    return s;
  }
  // Quantified atom.
  const bool all = f->op == Op::Forall;
  if (domain.empty()) {
    s.kind = GSide::Kind::Const;
    s.value = TruthValue(all ? 1 : 0);
    return s;
  }
  auto saved = b.find(f->name);
  std::optional<TermPtr> old;
  if (saved != b.end()) old = saved->second;
  for (const auto& u : domain) {
    b.insert_or_assign(f->name, u);
    int id = out.atom_id(instance(f->lhs, b));
    if (std::find(s.atoms.begin(), s.atoms.end(), id) == s.atoms.end()) s.atoms.push_back(id);
  }
  if (old)
    b.insert_or_assign(f->name, *old);
  else
    b.erase(f->name);
  s.kind = s.atoms.size() == 1 ? GSide::Kind::Atom : (all ? GSide::Kind::Inf : GSide::Kind::Sup);
  return s;
}

// 1 true, 0 false, -1 undetermined without a valuation.
int fold(const GLiteral& l) {
  if (l.lhs.kind == GSide::Kind::Const && l.rhs.kind == GSide::Kind::Const) {
    bool t = l.rel == Rel::Eq ? l.lhs.value == l.rhs.value : l.lhs.value < l.rhs.value;
    return t ? 1 : 0;
  }
  if (l.lhs.kind == GSide::Kind::Atom && l.rhs.kind == GSide::Kind::Atom && l.lhs.atoms == l.rhs.atoms)
    return l.rel == Rel::Eq ? 1 : 0;
  if (l.rel == Rel::Prec) {
    // Nothing lies below 0 or above 1.
    if (l.rhs.kind == GSide::Kind::Const && l.rhs.value.is_zero()) return 0;
    if (l.lhs.kind == GSide::Kind::Const && l.lhs.value.is_one()) return 0;
  }
  return -1;
}

void instantiate_clause(const OrderClause& c, const std::vector<std::string>& vars, std::size_t k,
                        std::map<std::string, TermPtr>& b, const std::vector<TermPtr>& domain, GroundTheory& out) {
  if (k < vars.size()) {
    for (const auto& u : domain) {
      b[vars[k]] = u;
      instantiate_clause(c, vars, k + 1, b, domain, out);
    }
    b.erase(vars[k]);
    return;
  }
  GClause g;
  for (const auto& l : c.literals()) {
    GLiteral gl{make_side(l.lhs, b, domain, out), l.rel, make_side(l.rhs, b, domain, out)};
    int v = fold(gl);
    if (v == 1) return;
    if (v == 0) continue;
    g.push_back(std::move(gl));
  }
  out.clauses.push_back(std::move(g));
}

bool has_quantified_side(const OrderClause& c) {
  return std::any_of(c.literals().begin(), c.literals().end(),
                     [](const OrderLiteral& l) { return l.lhs->is_quantifier() || l.rhs->is_quantifier(); });
}

}  // namespace

GroundTheory instantiate(const ClausalTheory& s, const std::vector<TermPtr>& domain) {
  GroundTheory out;
  out.add_constant(TruthValue(0));
  out.add_constant(TruthValue(1));
  for (const auto& t : domain)
    if (!is_ground(t)) throw std::invalid_argument("domain element " + format_term(t) + " is not ground");
  for (const auto& c : s.clauses()) {
    auto vars = detail::clause_free_vars(c);
    std::map<std::string, TermPtr> b;
    if (!vars.empty() && domain.empty()) continue;  // vacuously true over an empty domain
    instantiate_clause(c, vars, 0, b, domain, out);
  }
  return out;
}

GroundTheory ground_theory(const ClausalTheory& s) {
  for (const auto& c : s.clauses()) {
    if (!detail::clause_free_vars(c).empty())
      throw std::invalid_argument("clause is not ground: " + format_clause(c));
    if (has_quantified_side(c)) throw std::invalid_argument("clause has a quantified atom: " + format_clause(c));
  }
  return instantiate(s, {});
}

TruthValue side_value(const GSide& s, const std::vector<TruthValue>& v) {
  switch (s.kind) {
    case GSide::Kind::Const:
      return s.value;
    case GSide::Kind::Atom:
      return v[static_cast<std::size_t>(s.atoms[0])];
    case GSide::Kind::Inf: {
      TruthValue acc(1);
      for (int a : s.atoms) acc = g::inf(acc, v[static_cast<std::size_t>(a)]);
      return acc;
    }
    case GSide::Kind::Sup: {
      TruthValue acc(0);
      for (int a : s.atoms) acc = g::sup(acc, v[static_cast<std::size_t>(a)]);
      return acc;
    }
  }
  return TruthValue(0);
}

bool clause_true(const GClause& c, const std::vector<TruthValue>& v) {
  for (const auto& l : c) {
    TruthValue a = side_value(l.lhs, v);
    TruthValue b = side_value(l.rhs, v);
    if (l.rel == Rel::Eq ? a == b : a < b) return true;
  }
  return false;
}

bool theory_true(const GroundTheory& t, const std::vector<TruthValue>& v) {
  for (const auto& c : t.clauses)
    if (!clause_true(c, v)) return false;
  return true;
}

TruthValue GroundAtomModel::pred(const std::string& p, const std::vector<TermPtr>& args) const {
  std::string key = format_ground_atom(p, args);
  auto it = index_->find(key);
  if (it == index_->end()) throw std::invalid_argument("atom " + key + " has no value");
  return (*valuation_)[static_cast<std::size_t>(it->second)];
}

namespace {

void collect(const FormulaPtr& f, const std::vector<TermPtr>& domain, std::map<std::string, TermPtr>& b,
             std::map<std::string, int>& index, std::vector<std::string>& atoms) {
  switch (f->op) {
    case Op::Atom: {
      std::string key = instance(f, b);
      if (index.emplace(key, static_cast<int>(atoms.size())).second) atoms.push_back(key);
      return;
    }
    case Op::Const:
      return;
    case Op::Forall:
    case Op::Exists: {
      auto saved = b.find(f->name);
      std::optional<TermPtr> old;
      if (saved != b.end()) old = saved->second;
      for (const auto& u : domain) {
        b.insert_or_assign(f->name, u);
        collect(f->lhs, domain, b, index, atoms);
      }
      if (old)
        b.insert_or_assign(f->name, *old);
      else
        b.erase(f->name);
      return;
    }
    default:
      collect(f->lhs, domain, b, index, atoms);
      if (f->rhs) collect(f->rhs, domain, b, index, atoms);
  }
}

void collect_free(const FormulaPtr& f, const std::vector<std::string>& vars, std::size_t k,
                  const std::vector<TermPtr>& domain, std::map<std::string, TermPtr>& b,
                  std::map<std::string, int>& index, std::vector<std::string>& atoms) {
  if (k == vars.size()) {
    collect(f, domain, b, index, atoms);
    return;
  }
  for (const auto& u : domain) {
    b[vars[k]] = u;
    collect_free(f, vars, k + 1, domain, b, index, atoms);
  }
  b.erase(vars[k]);
}

}  // namespace

void collect_ground_atoms(const FormulaPtr& f, const std::vector<TermPtr>& domain, std::map<std::string, int>& index,
                          std::vector<std::string>& atoms) {
  std::map<std::string, TermPtr> b;
  collect_free(f, free_vars(f), 0, domain, b, index, atoms);
}

}  // namespace gforge
