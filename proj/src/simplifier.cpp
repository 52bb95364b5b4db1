#include "gforge/simplifier.hpp"

namespace gforge {

namespace {

const TruthValue kZero(0);
const TruthValue kOne(1);

bool is0(const FormulaPtr& f) { return f->is_const(kZero); }
bool is1(const FormulaPtr& f) { return f->is_const(kOne); }
bool both_const(const FormulaPtr& a, const FormulaPtr& b) { return a->is_const() && b->is_const(); }

FormulaPtr fold_imp(const FormulaPtr& a, const FormulaPtr& b) {
  if (both_const(a, b)) return constant(g::residuum(a->value, b->value));
  if (is0(a) || is1(b) || formula_equal(a, b)) return constant(kOne);
  if (is1(a)) return b;
  return imp(a, b);
}

FormulaPtr fold_and(const FormulaPtr& a, const FormulaPtr& b) {
  if (both_const(a, b)) return constant(g::inf(a->value, b->value));
  if (is0(a) || is0(b)) return constant(kZero);
  if (is1(a)) return b;
  if (is1(b) || formula_equal(a, b)) return a;
  return conj(a, b);
}

FormulaPtr fold_or(const FormulaPtr& a, const FormulaPtr& b) {
  if (both_const(a, b)) return constant(g::sup(a->value, b->value));
  if (is1(a) || is1(b)) return constant(kOne);
  if (is0(a)) return b;
  if (is0(b) || formula_equal(a, b)) return a;
  return disj(a, b);
}

FormulaPtr fold_iff(const FormulaPtr& a, const FormulaPtr& b) {
  if (both_const(a, b)) return constant(g::biresiduum(a->value, b->value));
  if (formula_equal(a, b)) return constant(kOne);
  if (is1(a)) return b;
  if (is1(b)) return a;
  if (is0(a)) return fold_imp(b, a);
  if (is0(b)) return fold_imp(a, b);
  return iff(a, b);
}

FormulaPtr fold_eq(const FormulaPtr& a, const FormulaPtr& b) {
  if (both_const(a, b)) return constant(g::eqcirc(a->value, b->value));
  if (formula_equal(a, b)) return constant(kOne);
  return eqc(a, b);
}

FormulaPtr fold_prec(const FormulaPtr& a, const FormulaPtr& b) {
  if (both_const(a, b)) return constant(g::prec(a->value, b->value));
  if (formula_equal(a, b) || is1(a) || is0(b)) return constant(kZero);
  return prec(a, b);
}

std::optional<std::string> violation(const FormulaPtr& f) {
  auto bad = [&](const char* why) { return std::optional<std::string>(std::string(why) + ": " + format_formula(f)); };
  switch (f->op) {
    case Op::Atom:
    case Op::Const:
      return std::nullopt;
    case Op::Neg:
    case Op::Delta:
      return bad("negation or Delta left");
    case Op::Forall:
    case Op::Exists:
      if (f->lhs->is_const()) return bad("quantified constant");
      return violation(f->lhs);
    default:
      break;
  }
  const auto& a = f->lhs;
  const auto& b = f->rhs;
  if (both_const(a, b)) return bad("two constant sides");
  switch (f->op) {
    case Op::And:
    case Op::Or:
    case Op::Iff:
      if (is0(a) || is1(a) || is0(b) || is1(b)) return bad("0 or 1 operand");
      break;
    case Op::Imp:
      if (is0(a) || is1(a) || is1(b)) return bad("0 or 1 operand");
      break;
    case Op::Prec:
      if (is1(a) || is0(b)) return bad("trivial strict order");
      break;
    default:
      break;
  }
  if (auto v = violation(a)) return v;
  return violation(b);
}

}  // namespace

FormulaPtr simplify(const FormulaPtr& f) {
  switch (f->op) {
    case Op::Atom:
    case Op::Const:
      return f;
    case Op::Neg:
      return fold_imp(simplify(f->lhs), constant(kZero));
    case Op::Delta:
      return fold_eq(simplify(f->lhs), constant(kOne));
    case Op::Forall:
    case Op::Exists: {
      FormulaPtr body = simplify(f->lhs);
      if (body->is_const()) return body;
      if (body == f->lhs) return f;
      return f->op == Op::Forall ? forall(f->name, body) : exists(f->name, body);
    }
    default:
      break;
  }
  FormulaPtr a = simplify(f->lhs);
  FormulaPtr b = simplify(f->rhs);
  switch (f->op) {
    case Op::And: return fold_and(a, b);
    case Op::Or: return fold_or(a, b);
    case Op::Imp: return fold_imp(a, b);
    case Op::Iff: return fold_iff(a, b);
    case Op::Eq: return fold_eq(a, b);
    case Op::Prec: return fold_prec(a, b);
    default: return f;
  }
}

std::optional<std::string> normal_form_violation(const FormulaPtr& f) {
  if (f->is_const()) return std::nullopt;
  return violation(f);
}

}  // namespace gforge
