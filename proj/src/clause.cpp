#include "gforge/clause.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gforge {

bool is_side(const FormulaPtr& f) { return f->is_atom() || f->is_const() || is_quantified_atom(f); }

namespace {

int side_rank(const FormulaPtr& f) {
  if (f->is_atom()) return 0;
  if (f->is_quantifier()) return 1;
  return 2;
}

const char* rel_symbol(Rel r) { return r == Rel::Eq ? "~" : "<"; }

}  // namespace

OrderLiteral canonical_literal(const OrderLiteral& l) {
  if (l.rel != Rel::Eq) return l;
  int ra = side_rank(l.lhs);
  int rb = side_rank(l.rhs);
  bool swap = ra > rb || (ra == rb && format_formula(l.rhs) < format_formula(l.lhs));
  return swap ? OrderLiteral{l.rhs, l.rel, l.lhs} : l;
}

OrderLiteral make_literal(FormulaPtr lhs, Rel rel, FormulaPtr rhs) {
  if (!is_side(lhs)) throw std::invalid_argument("not a literal side: " + format_formula(lhs));
  if (!is_side(rhs)) throw std::invalid_argument("not a literal side: " + format_formula(rhs));
  return canonical_literal(OrderLiteral{std::move(lhs), rel, std::move(rhs)});
}

OrderLiteral lit_eq(FormulaPtr lhs, FormulaPtr rhs) { return make_literal(std::move(lhs), Rel::Eq, std::move(rhs)); }
OrderLiteral lit_prec(FormulaPtr lhs, FormulaPtr rhs) { return make_literal(std::move(lhs), Rel::Prec, std::move(rhs)); }

std::string format_literal(const OrderLiteral& l) {
  return format_formula(l.lhs) + " " + rel_symbol(l.rel) + " " + format_formula(l.rhs);
}

std::size_t size(const OrderLiteral& l) { return 1 + size(l.lhs) + size(l.rhs); }

bool literal_equal(const OrderLiteral& a, const OrderLiteral& b) {
  auto ca = canonical_literal(a);
  auto cb = canonical_literal(b);
  return ca.rel == cb.rel && formula_equal(ca.lhs, cb.lhs) && formula_equal(ca.rhs, cb.rhs);
}

OrderClause::OrderClause(std::initializer_list<OrderLiteral> lits) {
  for (const auto& l : lits) add(l);
}

OrderClause::OrderClause(const std::vector<OrderLiteral>& lits) {
  for (const auto& l : lits) add(l);
}

void OrderClause::add(const OrderLiteral& l) {
  OrderLiteral c = canonical_literal(l);
  if (!lit_keys_.insert(format_literal(c)).second) return;
  lits_.push_back(std::move(c));
  rebuild_key();
}

void OrderClause::rebuild_key() {
  key_.clear();
  for (const auto& k : lit_keys_) {
    key_ += k;
    key_ += '\n';
  }
}

std::string format_clause(const OrderClause& c) {
  if (c.empty()) return "[]";
  std::string s;
  for (std::size_t i = 0; i < c.literals().size(); ++i) {
    if (i) s += " | ";
    s += format_literal(c.literals()[i]);
  }
  return s;
}

std::size_t size(const OrderClause& c) {
  std::size_t n = 0;
  for (const auto& l : c.literals()) n += size(l);
  return n;
}

void ClausalTheory::add(const OrderClause& c) {
  if (keys_.insert(c.key()).second) clauses_.push_back(c);
}

void ClausalTheory::add_all(const ClausalTheory& other) {
  for (const auto& c : other.clauses()) add(c);
}

bool ClausalTheory::contains_empty_clause() const {
  return std::any_of(clauses_.begin(), clauses_.end(), [](const OrderClause& c) { return c.empty(); });
}

std::size_t total_size(const ClausalTheory& s) {
  std::size_t n = 0;
  for (const auto& c : s.clauses()) n += size(c);
  return n;
}

std::string format_theory(const ClausalTheory& s) {
  std::string out;
  for (const auto& c : s.clauses()) {
    out += format_clause(c);
    out += '\n';
  }
  return out;
}

std::vector<TruthValue> tcons(const ClausalTheory& s) {
  std::vector<TruthValue> out;
  for (const auto& c : s.clauses())
    for (const auto& l : c.literals()) {
      collect_constants(l.lhs, out);
      collect_constants(l.rhs, out);
    }
  return out;
}

namespace {

void side_preds(const FormulaPtr& f, std::set<std::string>& out) {
  if (f->is_atom()) out.insert(f->name);
  if (f->is_quantifier()) out.insert(f->lhs->name);
}

}  // namespace

std::set<std::string> preds(const OrderClause& c) {
  std::set<std::string> out;
  for (const auto& l : c.literals()) {
    side_preds(l.lhs, out);
    side_preds(l.rhs, out);
  }
  return out;
}

ClausalTheory substitute(const ClausalTheory& s, const std::map<std::string, TermPtr>& bindings) {
  ClausalTheory out;
  for (const auto& c : s.clauses()) {
    OrderClause d;
    for (const auto& l : c.literals()) {
      // Each side is substituted on its own: a variable free in one side may
      // be bound in a quantified atom on the other.
      auto sub_side = [&](const FormulaPtr& f) {
        auto fv = free_vars(f);
        std::map<std::string, TermPtr> local;
        for (const auto& [x, t] : bindings)
          if (std::find(fv.begin(), fv.end(), x) != fv.end()) local.emplace(x, t);
        return substitute(f, local);
      };
      d.add(make_literal(sub_side(l.lhs), l.rel, sub_side(l.rhs)));
    }
    out.add(d);
  }
  return out;
}

namespace {

void flatten_or(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  if (f->op == Op::Or) {
    flatten_or(f->lhs, out);
    flatten_or(f->rhs, out);
  } else {
    out.push_back(f);
  }
}

}  // namespace

OrderClause parse_clause(const std::string& line, Signature& sig, ParseOptions opts) {
  std::string trimmed = line;
  trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
  trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
  if (trimmed == "[]") return OrderClause{};
  FormulaPtr f = parse_formula(trimmed, sig, opts);
  std::vector<FormulaPtr> parts;
  flatten_or(f, parts);
  OrderClause c;
  for (const auto& p : parts) {
    if (p->op != Op::Eq && p->op != Op::Prec)
      throw std::invalid_argument("not an order literal: " + format_formula(p));
    c.add(make_literal(p->lhs, p->op == Op::Eq ? Rel::Eq : Rel::Prec, p->rhs));
  }
  return c;
}

ClausalTheory parse_theory(const std::string& text, Signature& sig, ParseOptions opts) {
  ClausalTheory s;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      s.add(parse_clause(line, sig, opts));
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return s;
}

}  // namespace gforge
