#include "gforge/clausifier.hpp"

#include "gforge/simplifier.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace gforge {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Leaf: return "leaf";
    case Rule::And: return "and";
    case Rule::Or: return "or";
    case Rule::Imp: return "imp";
    case Rule::Iff: return "iff";
    case Rule::Eq: return "eq";
    case Rule::Prec: return "prec";
    case Rule::ImpZero: return "imp-zero";
    case Rule::EqZero: return "eq-zero";
    case Rule::EqOne: return "eq-one";
    case Rule::ZeroPrec: return "zero-prec";
    case Rule::PrecOne: return "prec-one";
    case Rule::Forall: return "forall";
    case Rule::Exists: return "exists";
  }
  return "?";
}

std::string format_trace_step(const TraceStep& s) {
  std::string head = s.rule == Rule::Leaf ? std::string("leaf") :
                                            "(" + std::to_string(static_cast<int>(s.rule)) + ") " + rule_name(s.rule);
  return head + " at " + reserved::fresh_pred(s.at.i, s.at.j) + ": " + format_formula(s.subformula);
}

FormulaPtr fresh_atom(PredIndex k, const std::vector<std::string>& xs) {
  std::vector<TermPtr> args;
  args.reserve(xs.size());
  for (const auto& x : xs) args.push_back(var(x));
  return atom(reserved::fresh_pred(k.i, k.j), std::move(args));
}

namespace {

const TruthValue kZero(0);
const TruthValue kOne(1);

struct Shape {
  Rule rule;
  FormulaPtr left;   // the only child for unary rules
  FormulaPtr right;  // null for unary rules
};

Shape classify(const FormulaPtr& t) {
  const auto& a = t->lhs;
  const auto& b = t->rhs;
  switch (t->op) {
    case Op::And: return {Rule::And, a, b};
    case Op::Or: return {Rule::Or, a, b};
    case Op::Iff: return {Rule::Iff, a, b};
    case Op::Imp:
      if (b->is_const(kZero)) return {Rule::ImpZero, a, nullptr};
      return {Rule::Imp, a, b};
    case Op::Eq:
      // The two sides of ~ are interchangeable.
      if (b->is_const(kZero)) return {Rule::EqZero, a, nullptr};
      if (a->is_const(kZero)) return {Rule::EqZero, b, nullptr};
      if (b->is_const(kOne)) return {Rule::EqOne, a, nullptr};
      if (a->is_const(kOne)) return {Rule::EqOne, b, nullptr};
      return {Rule::Eq, a, b};
    case Op::Prec:
      if (a->is_const(kZero)) return {Rule::ZeroPrec, b, nullptr};
      if (b->is_const(kOne)) return {Rule::PrecOne, a, nullptr};
      return {Rule::Prec, a, b};
    case Op::Forall: return {Rule::Forall, a, nullptr};
    case Op::Exists: return {Rule::Exists, a, nullptr};
    default:
      throw std::invalid_argument("interpolate: unexpected connective in " + format_formula(t));
  }
}

FormulaPtr c0() { return constant(kZero); }
FormulaPtr c1() { return constant(kOne); }

// Clause prefix of a rule; p is the node, a and b its children.
std::vector<OrderClause> prefix(Rule r, const FormulaPtr& p, const FormulaPtr& a, const FormulaPtr& b,
                                const std::string& x) {
  switch (r) {
    case Rule::And:
      return {{lit_prec(a, b), lit_eq(a, b), lit_eq(p, b)}, {lit_prec(b, a), lit_eq(p, a)}};
    case Rule::Or:
      return {{lit_prec(a, b), lit_eq(a, b), lit_eq(p, a)}, {lit_prec(b, a), lit_eq(p, b)}};
    case Rule::Imp:
      return {{lit_prec(a, b), lit_eq(a, b), lit_eq(p, b)}, {lit_prec(b, a), lit_eq(p, c1())}};
    case Rule::Iff:
      return {{lit_prec(a, b), lit_eq(a, b), lit_eq(p, b)},
              {lit_prec(b, a), lit_eq(b, a), lit_eq(p, a)},
              {lit_prec(a, b), lit_prec(b, a), lit_eq(p, c1())}};
    case Rule::Eq:
      return {{lit_eq(a, b), lit_eq(p, c0())}, {lit_prec(a, b), lit_prec(b, a), lit_eq(p, c1())}};
    case Rule::Prec:
      return {{lit_prec(a, b), lit_eq(p, c0())}, {lit_prec(b, a), lit_eq(b, a), lit_eq(p, c1())}};
    case Rule::ImpZero:
    case Rule::EqZero:
      return {{lit_eq(a, c0()), lit_eq(p, c0())}, {lit_prec(c0(), a), lit_eq(p, c1())}};
    case Rule::EqOne:
      return {{lit_eq(a, c1()), lit_eq(p, c0())}, {lit_prec(a, c1()), lit_eq(p, c1())}};
    case Rule::ZeroPrec:
      return {{lit_prec(c0(), a), lit_eq(p, c0())}, {lit_eq(a, c0()), lit_eq(p, c1())}};
    case Rule::PrecOne:
      return {{lit_prec(a, c1()), lit_eq(p, c0())}, {lit_eq(a, c1()), lit_eq(p, c1())}};
    case Rule::Forall:
      return {{lit_eq(p, forall(x, a))}};
    case Rule::Exists:
      return {{lit_eq(p, exists(x, a))}};
    case Rule::Leaf:
      break;
  }
  throw std::logic_error("prefix: leaf has no prefix");
}

struct Interpolator {
  std::size_t i;
  const std::vector<std::string>& xs;
  std::vector<PredIndex> fresh;
  std::vector<TraceStep> trace;

  // Emits the clauses for p_(i,j)(xs) <-> t into out and returns n_J.
  std::size_t run(const FormulaPtr& t, std::size_t j, ClausalTheory& out) {
    FormulaPtr p = fresh_atom({i, j}, xs);
    if (t->is_atom() || t->is_const()) {
      trace.push_back({Rule::Leaf, {i, j}, t});
      out.add(OrderClause{lit_eq(p, t)});
      return j;
    }
    Shape s = classify(t);
    trace.push_back({s.rule, {i, j}, t});
    const std::size_t j1 = j + 1;
    fresh.push_back({i, j1});
    FormulaPtr a = fresh_atom({i, j1}, xs);
    ClausalTheory s1;
    std::size_t n1 = run(s.left, j1, s1);
    if (!s.right) {
      for (const auto& c : prefix(s.rule, p, a, nullptr, t->name)) out.add(c);
      out.add_all(s1);
      return n1;
    }
    const std::size_t j2 = n1 + 1;
    fresh.push_back({i, j2});
    FormulaPtr b = fresh_atom({i, j2}, xs);
    ClausalTheory s2;
    std::size_t n2 = run(s.right, j2, s2);
    for (const auto& c : prefix(s.rule, p, a, b, {})) out.add(c);
    out.add_all(s1);
    out.add_all(s2);
    return n2;
  }
};

}  // namespace

TranslationResult interpolate(const FormulaPtr& theta, const std::vector<std::string>& xs, PredIndex start) {
  if (theta->is_const(kZero) || theta->is_const(kOne))
    throw std::invalid_argument("interpolate: formula is the constant " + theta->value.str());
  if (auto v = normal_form_violation(theta)) throw std::invalid_argument("interpolate: not in normal form (" + *v + ")");
  for (const auto& x : varseq(theta))
    if (std::find(xs.begin(), xs.end(), x) == xs.end())
      throw std::invalid_argument("interpolate: variable '" + x + "' missing from the argument vector");

  Interpolator in{start.i, xs, {}, {}};
  TranslationResult r;
  r.root = start;
  r.shared_vars = xs;
  r.last_j = in.run(theta, start.j, r.clauses);
  r.fresh = std::move(in.fresh);
  r.trace = std::move(in.trace);

  SizeReport rep = size_report(theta, r);
  if (!rep.interpolation_ok) throw std::logic_error("interpolate: size certificate violated");
  return r;
}

SizeReport size_report(const FormulaPtr& theta, const TranslationResult& r) {
  SizeReport rep;
  rep.theta_size = size(theta);
  rep.xs_size = r.shared_vars.size();
  rep.fresh = r.fresh.size();
  rep.clause_size = total_size(r.clauses);
  rep.interpolation_ok =
      rep.fresh + 1 <= rep.theta_size && rep.clause_size <= 27 * rep.theta_size * (1 + rep.xs_size);
  return rep;
}

TranslationResult clausify_positive(const FormulaPtr& phi, std::size_t offset,
                                    const std::optional<std::vector<std::string>>& xs) {
  FormulaPtr theta = simplify(phi);
  TranslationResult r;
  r.root = {offset, 0};
  if (theta->is_const()) {
    if (theta->is_const(kOne)) {
      r.kind = TranslationResult::Kind::Empty;
    } else {
      r.kind = TranslationResult::Kind::EmptyClause;
      r.clauses.add(OrderClause{});
    }
    return r;
  }
  std::vector<std::string> args = xs ? *xs : dedup_preserving_first_occurrence(varseq(theta));
  TranslationResult inner = interpolate(theta, args, r.root);
  r.shared_vars = args;
  r.clauses.add(OrderClause{lit_eq(fresh_atom(r.root, args), c1())});
  r.clauses.add_all(inner.clauses);
  r.fresh.push_back(r.root);
  r.fresh.insert(r.fresh.end(), inner.fresh.begin(), inner.fresh.end());
  r.last_j = inner.last_j;
  r.trace = std::move(inner.trace);

  const std::size_t n = size(phi);
  if (r.fresh.size() > 2 * n || total_size(r.clauses) > 232 * n * n)
    throw std::logic_error("clausify_positive: size certificate violated");
  return r;
}

TheoryTranslation clausify_theory(const std::vector<FormulaPtr>& theory, std::size_t n0) {
  TheoryTranslation t;
  for (std::size_t k = 0; k < theory.size(); ++k) {
    TranslationResult r = clausify_positive(theory[k], n0 + k);
    if (r.kind == TranslationResult::Kind::EmptyClause) t.has_empty_clause = true;
    t.clauses.add_all(r.clauses);
    t.members.push_back(std::move(r));
  }
  return t;
}

RefutationInput build_refutation_input(const std::vector<FormulaPtr>& theory, const FormulaPtr& phi, std::size_t n0) {
  RefutationInput out;
  out.premises = clausify_theory(theory, n0 + 1);
  FormulaPtr theta = simplify(phi);
  if (theta->is_const()) {
    // A constant below 1 is entailed only by an unsatisfiable theory.
    if (theta->is_const(kOne))
      out.clauses.add(OrderClause{});
    else
      out.clauses = out.premises.clauses;
    return out;
  }
  std::vector<std::string> xs = dedup_preserving_first_occurrence(varseq(theta));
  std::vector<std::string> fv = free_vars(theta);
  FormulaPtr closure = theta;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it)
    if (std::find(fv.begin(), fv.end(), *it) != fv.end()) closure = forall(*it, closure);

  PredIndex root{n0, 0};
  TranslationResult inner = interpolate(closure, xs, root);
  TranslationResult goal;
  goal.root = root;
  goal.shared_vars = xs;
  goal.clauses.add(OrderClause{lit_prec(fresh_atom(root, xs), c1())});
  goal.clauses.add_all(inner.clauses);
  goal.fresh.push_back(root);
  goal.fresh.insert(goal.fresh.end(), inner.fresh.begin(), inner.fresh.end());
  goal.last_j = inner.last_j;
  goal.trace = std::move(inner.trace);

  out.clauses = out.premises.clauses;
  out.clauses.add_all(goal.clauses);
  out.goal = std::move(goal);
  return out;
}

namespace {

bool is_fresh_name(const std::string& p) { return reserved::fresh_index(p).has_value(); }

FormulaPtr rename_side(const FormulaPtr& f, const std::map<std::string, std::string>& m) {
  if (f->is_atom()) {
    auto it = m.find(f->name);
    return it == m.end() ? f : atom(it->second, f->args);
  }
  if (f->is_quantifier()) {
    FormulaPtr body = rename_side(f->lhs, m);
    return f->op == Op::Forall ? forall(f->name, body) : exists(f->name, body);
  }
  return f;
}

OrderClause rename(const OrderClause& c, const std::map<std::string, std::string>& m) {
  OrderClause out;
  for (const auto& l : c.literals()) out.add(make_literal(rename_side(l.lhs, m), l.rel, rename_side(l.rhs, m)));
  return out;
}

struct Indexed {
  std::vector<std::string> names;                   // fresh predicates in first-occurrence order
  std::vector<std::vector<std::size_t>> clauses_of;  // per predicate
  std::vector<std::set<std::string>> fresh_in;      // per clause
  std::vector<std::string> color;                   // per predicate
};

Indexed index_theory(const ClausalTheory& s) {
  Indexed ix;
  std::map<std::string, std::size_t> pos;
  for (std::size_t ci = 0; ci < s.clauses().size(); ++ci) {
    std::set<std::string> fs;
    for (const auto& p : preds(s.clauses()[ci]))
      if (is_fresh_name(p)) fs.insert(p);
    // First-occurrence order follows literal order, not set order.
    for (const auto& l : s.clauses()[ci].literals())
      for (const auto* side : {&l.lhs, &l.rhs}) {
        const FormulaPtr& f = *side;
        std::string name = f->is_atom() ? f->name : f->is_quantifier() ? f->lhs->name : "";
        if (!name.empty() && is_fresh_name(name) && !pos.count(name)) {
          pos[name] = ix.names.size();
          ix.names.push_back(name);
          ix.clauses_of.emplace_back();
        }
      }
    for (const auto& p : fs) ix.clauses_of[pos[p]].push_back(ci);
    ix.fresh_in.push_back(std::move(fs));
  }
  for (std::size_t k = 0; k < ix.names.size(); ++k) {
    std::vector<std::string> shapes;
    for (std::size_t ci : ix.clauses_of[k]) {
      std::map<std::string, std::string> m;
      for (const auto& p : ix.fresh_in[ci]) m[p] = p == ix.names[k] ? "$p.0.0" : "$p.1.1";
      shapes.push_back(rename(s.clauses()[ci], m).key());
    }
    std::sort(shapes.begin(), shapes.end());
    std::string color;
    for (const auto& sh : shapes) color += sh + "\x1f";
    ix.color.push_back(std::move(color));
  }
  return ix;
}

}  // namespace

bool isomorphic_up_to_fresh_renaming(const ClausalTheory& a, const ClausalTheory& b) {
  if (a.size() != b.size()) return false;
  Indexed ia = index_theory(a);
  Indexed ib = index_theory(b);
  if (ia.names.size() != ib.names.size()) return false;
  {
    auto ca = ia.color;
    auto cb = ib.color;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return false;
  }
  const std::size_t n = ia.names.size();
  std::map<std::string, std::string> m;
  std::vector<bool> used(n, false);

  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == n) {
      for (const auto& c : a.clauses())
        if (!b.contains(rename(c, m))) return false;
      return true;
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || ib.color[t] != ia.color[k]) continue;
      m[ia.names[k]] = ib.names[t];
      used[t] = true;
      bool ok = true;
      for (std::size_t ci : ia.clauses_of[k]) {
        bool complete = std::all_of(ia.fresh_in[ci].begin(), ia.fresh_in[ci].end(),
                                    [&](const std::string& p) { return m.count(p) != 0; });
        if (complete && !b.contains(rename(a.clauses()[ci], m))) {
          ok = false;
          break;
        }
      }
      if (ok && extend(k + 1)) return true;
      used[t] = false;
      m.erase(ia.names[k]);
    }
    return false;
  };
  return extend(0);
}

}  // namespace gforge
