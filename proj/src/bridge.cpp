#include "gforge/bridge.hpp"

#include "gforge/parser.hpp"
#include "gforge/semantics.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

namespace gforge {

namespace {

// Numerals longer than this are rejected as universe encodings.
constexpr std::int64_t kMaxNumeral = 4096;

FormulaPtr pred1(const std::string& p, TermPtr t) { return atom(p, {std::move(t)}); }

std::optional<std::size_t> nat_value(const TermPtr& t) {
  std::size_t n = 0;
  const Term* p = t.get();
  while (!p->is_var() && p->name == reserved::succ && p->args.size() == 1) {
    ++n;
    p = p->args[0].get();
  }
  if (p->is_var() || p->name != reserved::zero || !p->args.empty()) return std::nullopt;
  return n;
}

}  // namespace

// ---- numerals

Rational Numeral::value() const {
  switch (kind) {
    case Kind::Nat:
      return Rational(m);
    case Kind::Frac:
      return Rational(m, n);
    case Kind::NegFrac:
      return Rational(-m, n);
  }
  return Rational(0);
}

TermPtr Numeral::term() const {
  switch (kind) {
    case Kind::Nat:
      return nat_numeral(static_cast<std::size_t>(m));
    case Kind::Frac:
      return app(reserved::frac, {nat_numeral(static_cast<std::size_t>(m)), nat_numeral(static_cast<std::size_t>(n))});
    case Kind::NegFrac:
      return app(reserved::nfrac, {nat_numeral(static_cast<std::size_t>(m)), nat_numeral(static_cast<std::size_t>(n))});
  }
  return nullptr;
}

TermPtr succ_power(const TermPtr& t, std::size_t k) {
  TermPtr out = t;
  for (std::size_t i = 0; i < k; ++i) out = app(reserved::succ, {out});
  return out;
}

TermPtr nat_numeral(std::size_t n) { return succ_power(app(reserved::zero), n); }

TermPtr rational_numeral(const Rational& q) {
  const std::int64_t m = q.numerator() < 0 ? -q.numerator() : q.numerator();
  if (m > kMaxNumeral || q.denominator() > kMaxNumeral)
    throw std::invalid_argument("rational too large for a numeral encoding");
  Numeral n{q.numerator() < 0 ? Numeral::Kind::NegFrac : Numeral::Kind::Frac, m, q.denominator()};
  return n.term();
}

std::optional<Numeral> decode_numeral(const TermPtr& t) {
  if (auto n = nat_value(t)) return Numeral{Numeral::Kind::Nat, static_cast<std::int64_t>(*n), 0};
  if (t->is_var() || t->args.size() != 2) return std::nullopt;
  const bool pos = t->name == reserved::frac;
  if (!pos && t->name != reserved::nfrac) return std::nullopt;
  auto m = nat_value(t->args[0]);
  auto n = nat_value(t->args[1]);
  if (!m || !n || *n == 0 || (!pos && *m == 0)) return std::nullopt;
  return Numeral{pos ? Numeral::Kind::Frac : Numeral::Kind::NegFrac, static_cast<std::int64_t>(*m),
                 static_cast<std::int64_t>(*n)};
}

// ---- translations

std::vector<FormulaPtr> domain_axioms(const Signature& sig) {
  auto x = var("x");
  auto y = var("y");
  auto s = [](TermPtr t) { return app(reserved::succ, {std::move(t)}); };
  std::vector<FormulaPtr> out;
  out.push_back(pred1(reserved::nat, app(reserved::zero)));
  out.push_back(iff(pred1(reserved::nat, s(x)), pred1(reserved::nat, x)));
  out.push_back(iff(pred1(reserved::rat, app(reserved::frac, {x, s(y)})),
                    conj(pred1(reserved::nat, x), pred1(reserved::nat, y))));
  out.push_back(iff(pred1(reserved::rat, app(reserved::nfrac, {s(x), s(y)})),
                    conj(pred1(reserved::nat, x), pred1(reserved::nat, y))));
  auto generic = [](const std::string& f, std::size_t arity) {
    std::vector<TermPtr> args;
    for (std::size_t i = 1; i <= arity; ++i) args.push_back(var("v" + std::to_string(i)));
    return app(f, std::move(args));
  };
  for (const auto& [f, arity] : sig.functions())
    if (f != reserved::zero && f != reserved::succ && f != reserved::carrier)
      out.push_back(eqc(pred1(reserved::nat, generic(f, arity)), constant(0)));
  for (const auto& [f, arity] : sig.functions())
    if (f != reserved::frac && f != reserved::nfrac && f != reserved::carrier)
      out.push_back(eqc(pred1(reserved::rat, generic(f, arity)), constant(0)));
  out.push_back(iff(pred1(reserved::time, x), pred1(reserved::nat, x)));
  out.push_back(imp(pred1(reserved::uni, x), pred1(reserved::rat, x)));
  return out;
}

UniverseClauses::UniverseClauses(const UniverseSpec& u) {
  for (const auto& q : u.elements()) {
    members_.push_back(rational_numeral(q));
    positive_.add(OrderClause{lit_eq(pred1(reserved::uni, members_.back()), constant(1))});
  }
}

std::optional<std::size_t> UniverseClauses::member_index(const TermPtr& t) const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (term_equal(members_[i], t)) return i;
  return std::nullopt;
}

TruthValue UniverseClauses::value(const TermPtr& t) const { return TruthValue(member_index(t) ? 1 : 0); }

OrderClause UniverseClauses::clause_for(const TermPtr& t) const {
  if (!is_ground(t)) throw std::invalid_argument("closed-world query on a non-ground term");
  return OrderClause{lit_eq(pred1(reserved::uni, t), constant(value(t)))};
}

ClausalTheory UniverseClauses::instantiate(const std::vector<TermPtr>& terms) const {
  ClausalTheory out = positive_;
  for (const auto& t : terms) out.add(clause_for(t));
  return out;
}

ClausalTheory fuzzy_set_clauses(const RuleBase& b) {
  UniverseClauses u(b.universe);
  ClausalTheory out;
  for (const auto& s : b.sets)
    for (std::size_t i = 0; i < u.members().size(); ++i)
      out.add(OrderClause{lit_eq(pred1(reserved::set_pred(s.name), u.members()[i]), constant(s.membership[i]))});
  return out;
}

ClausalTheory assignment_clauses(const RuleBase& b, const FuzzyAssignment& e) {
  if (e.size() != b.variables.size()) throw std::invalid_argument("assignment does not match the variables");
  UniverseClauses u(b.universe);
  ClausalTheory out;
  for (std::size_t x = 0; x < b.variables.size(); ++x)
    for (std::size_t i = 0; i < u.members().size(); ++i)
      out.add(OrderClause{lit_eq(atom(reserved::var_pred(b.variables[x]), {var(kTimeVar), u.members()[i]}),
                                 constant(e[x].at(i)))});
  return out;
}

namespace {

FormulaPtr time_and_uni() { return conj(pred1(reserved::time, var(kTimeVar)), pred1(reserved::uni, var("y"))); }

TermPtr next_time() { return app(reserved::succ, {var(kTimeVar)}); }

}  // namespace

FormulaPtr rule_formula(const FuzzyRule& r) {
  if (r.antecedents.empty()) throw std::invalid_argument("rule " + r.label + " has no antecedent");
  auto x = var("x");
  std::vector<FormulaPtr> parts;
  for (const auto& a : r.antecedents)
    parts.push_back(exists("x", conj(pred1(reserved::uni, x),
                                     conj(atom(reserved::var_pred(a.var), {var(kTimeVar), x}),
                                          pred1(reserved::set_pred(a.set), x)))));
  auto head = atom(reserved::rule_pred(r.label, r.consequent.var), {next_time(), var("y")});
  auto body = conj(conj_all(parts), pred1(reserved::set_pred(r.consequent.set), var("y")));
  return imp(time_and_uni(), eqc(head, body));
}

FormulaPtr aggregation_formula(const RuleBase& b, const std::string& x) {
  std::vector<FormulaPtr> outs;
  for (const auto& r : b.rules)
    if (r.consequent.var == x) outs.push_back(atom(reserved::rule_pred(r.label, x), {next_time(), var("y")}));
  auto head = atom(reserved::var_pred(x), {next_time(), var("y")});
  return imp(time_and_uni(), eqc(head, outs.empty() ? constant(0) : disj_all(outs)));
}

std::vector<FormulaPtr> base_theory(const RuleBase& b) {
  std::vector<FormulaPtr> out;
  for (const auto& r : b.rules) out.push_back(rule_formula(r));
  for (const auto& x : b.variables) out.push_back(aggregation_formula(b, x));
  return out;
}

ProblemSpec ProblemSpec::reachability(std::vector<Antecedent> targets) {
  ProblemSpec p;
  p.kind = Kind::Reachability;
  p.targets = std::move(targets);
  return p;
}

ProblemSpec ProblemSpec::stability() { return ProblemSpec{}; }

ProblemSpec ProblemSpec::cycle(std::size_t k) {
  if (k == 0) throw std::invalid_argument("cycle length must be at least 1");
  ProblemSpec p;
  p.kind = Kind::KCycle;
  p.k = k;
  return p;
}

FormulaPtr problem_formula(const RuleBase& b, const ProblemSpec& p) {
  auto tau = var(kTimeVar);
  auto x = var("x");
  std::vector<FormulaPtr> parts;
  if (p.kind == ProblemSpec::Kind::Reachability) {
    if (p.targets.empty()) throw std::invalid_argument("reachability needs at least one target");
    std::map<std::string, int> seen;
    for (const auto& t : p.targets) {
      if (!b.has_var(t.var)) throw std::invalid_argument("unknown variable " + t.var);
      if (!b.has_set(t.set)) throw std::invalid_argument("unknown fuzzy set " + t.set);
      if (seen[t.var]++) throw std::invalid_argument("variable " + t.var + " targeted twice");
      parts.push_back(forall("x", imp(pred1(reserved::uni, x), eqc(atom(reserved::var_pred(t.var), {tau, x}),
                                                                 pred1(reserved::set_pred(t.set), x)))));
    }
  } else {
    const std::size_t k = p.kind == ProblemSpec::Kind::Stability ? 1 : p.k;
    if (k == 0) throw std::invalid_argument("cycle length must be at least 1");
    for (const auto& v : b.variables)
      parts.push_back(forall("x", imp(pred1(reserved::uni, x), eqc(atom(reserved::var_pred(v), {tau, x}),
                                                                 atom(reserved::var_pred(v), {succ_power(tau, k), x})))));
  }
  return exists(kTimeVar, conj(pred1(reserved::time, tau), conj_all(parts)));
}

Signature working_signature() { return Signature::minimal_numeric(); }

DeductionProblem build_deduction_problem(const RuleBase& b, const FuzzyAssignment& e0, const ProblemSpec& p) {
  DeductionProblem out{domain_axioms(working_signature()), fuzzy_set_clauses(b), UniverseClauses(b.universe),
                       problem_formula(b, p)};
  for (auto& f : base_theory(b)) out.formulas.push_back(std::move(f));
  out.clauses.add_all(substitute(assignment_clauses(b, e0), {{kTimeVar, app(reserved::zero)}}));
  return out;
}

// ---- canonical model

namespace {

// Element ids stand for ground terms; only the numeral reading of a term
// matters to the predicates, so terms are interned by (symbol, argument ids).
class CanonicalModel {
 public:
  using Element = int;

  CanonicalModel(const RuleBase& b, const Derivation& d, std::size_t t_max, const std::optional<Perturbation>& perturb)
      : b_(b), d_(d), universe_(b.universe) {
    rule_out_.resize(d.states.size());
    for (std::size_t t = 1; t < d.states.size(); ++t)
      for (const auto& r : b.rules) rule_out_[t].push_back(eval_rule(b, r, d.states[t - 1]));
    for (std::size_t k = 0; k <= t_max; ++k) domain_.push_back(intern(nat_numeral(k)));
    for (const auto& m : universe_.members()) domain_.push_back(intern(m));
    for (std::size_t i = 0; i < b.sets.size(); ++i) preds_[reserved::set_pred(b.sets[i].name)] = {PredKind::Set, i};
    for (std::size_t i = 0; i < b.variables.size(); ++i)
      preds_[reserved::var_pred(b.variables[i])] = {PredKind::Var, i};
    for (std::size_t i = 0; i < b.rules.size(); ++i)
      preds_[reserved::rule_pred(b.rules[i].label, b.rules[i].consequent.var)] = {PredKind::Rule, i};
    preds_[reserved::nat] = {PredKind::Nat, 0};
    preds_[reserved::time] = {PredKind::Nat, 0};
    preds_[reserved::rat] = {PredKind::Rat, 0};
    preds_[reserved::uni] = {PredKind::Uni, 0};
    if (perturb) {
      if (!b.has_var(perturb->var)) throw std::invalid_argument("perturbation names unknown variable " + perturb->var);
      if (perturb->element >= b.universe.size()) throw std::invalid_argument("perturbation element out of range");
      perturb_ = perturb;
      perturb_var_ = b.var_index(perturb->var);
    }
  }

  const std::vector<int>& domain() const { return domain_; }

  int apply(const std::string& f, const std::vector<int>& args) const {
    Key key{f, args};
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    Info info;
    if (f == reserved::zero && args.empty()) {
      info.nat = 0;
    } else if (f == reserved::succ && args.size() == 1 && info_[args[0]].nat) {
      info.nat = *info_[args[0]].nat + 1;
    } else if ((f == reserved::frac || f == reserved::nfrac) && args.size() == 2) {
      const auto& m = info_[args[0]].nat;
      const auto& n = info_[args[1]].nat;
      const bool neg = f == reserved::nfrac;
      if (m && n && *n > 0 && (!neg || *m > 0)) {
        info.rat = true;
        auto mi = static_cast<std::int64_t>(*m);
        auto ni = static_cast<std::int64_t>(*n);
        // The universe is matched on the exact term, so only the canonical
        // lowest-terms encoding is a member.
        Rational q(neg ? -mi : mi, ni);
        if (q.denominator() == ni && q.numerator() == (neg ? -mi : mi)) info.uni = universe_index(q);
      }
    }
    const int id = static_cast<int>(info_.size());
    info_.push_back(info);
    ids_.emplace(std::move(key), id);
    return id;
  }

  TruthValue pred(const std::string& p, const std::vector<int>& args) const {
    auto it = preds_.find(p);
    if (it == preds_.end()) throw std::invalid_argument("canonical model: unknown predicate " + p);
    const auto [kind, idx] = it->second;
    auto one = [](bool c) { return TruthValue(c ? 1 : 0); };
    switch (kind) {
      case PredKind::Nat:
        return one(info_[args.at(0)].nat.has_value());
      case PredKind::Rat:
        return one(info_[args.at(0)].rat);
      case PredKind::Uni:
        return one(info_[args.at(0)].uni.has_value());
      case PredKind::Set: {
        const auto& u = info_[args.at(0)].uni;
        return u ? b_.sets[idx].membership[*u] : TruthValue(0);
      }
      case PredKind::Var:
      case PredKind::Rule: {
        const auto& t = info_[args.at(0)].nat;
        const auto& u = info_[args.at(1)].uni;
        if (!t || !u || *t >= d_.states.size()) return TruthValue(0);
        if (kind == PredKind::Var) {
          if (perturb_ && perturb_var_ == idx && perturb_->time == *t && perturb_->element == *u)
            return perturb_->value;
          return d_.states[*t][idx][*u];
        }
        if (*t == 0) return TruthValue(0);
        return rule_out_[*t][idx][*u];
      }
    }
    return TruthValue(0);
  }

  int intern(const TermPtr& t) {
    if (t->is_var()) throw std::invalid_argument("canonical model: non-ground term");
    std::vector<int> args;
    for (const auto& a : t->args) args.push_back(intern(a));
    return apply(t->name, args);
  }

 private:
  enum class PredKind { Nat, Rat, Uni, Set, Var, Rule };
  struct Info {
    std::optional<std::size_t> nat;
    bool rat = false;
    std::optional<std::size_t> uni;
  };
  using Key = std::pair<std::string, std::vector<int>>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = std::hash<std::string>{}(k.first);
      for (int a : k.second) h = h * 1000003u + static_cast<std::size_t>(a);
      return h;
    }
  };

  std::optional<std::size_t> universe_index(const Rational& q) const { return b_.universe.index_of(q); }

  const RuleBase& b_;
  const Derivation& d_;
  UniverseClauses universe_;
  std::vector<int> domain_;
  std::vector<std::vector<Membership>> rule_out_;  // rule outputs at time t, from state t-1
  std::map<std::string, std::pair<PredKind, std::size_t>> preds_;
  std::optional<Perturbation> perturb_;
  std::size_t perturb_var_ = 0;
  mutable std::vector<Info> info_;
  mutable std::unordered_map<Key, int, KeyHash> ids_;
};

}  // namespace

struct LemmaChecker::Impl {
  Derivation d;
  std::optional<CanonicalModel> model;
};

LemmaChecker::LemmaChecker(const RuleBase& b, const FuzzyAssignment& e0, std::size_t t_max,
                           const std::optional<Perturbation>& perturb)
    : b_(b), e0_(e0), t_max_(t_max), impl_(new Impl) {
  impl_->d = derive(b, e0, t_max + 1);
  impl_->model.emplace(b, impl_->d, t_max, perturb);
  const CanonicalModel& m = *impl_->model;
  DeductionProblem dp = build_deduction_problem(b, e0, ProblemSpec::stability());
  premises_hold_ = true;
  for (const auto& f : dp.formulas)
    if (!holds(f, m)) {
      premises_hold_ = false;
      return;
    }
  ClausalTheory su = dp.universe.positive();
  for (std::size_t k = 0; k <= t_max; ++k) su.add(dp.universe.clause_for(nat_numeral(k)));
  premises_hold_ = satisfies(m, su) && satisfies(m, dp.clauses);
}

LemmaChecker::~LemmaChecker() { delete impl_; }

bool LemmaChecker::consequence_holds(std::size_t eta) const {
  if (eta > t_max_) throw std::invalid_argument("eta exceeds the time bound");
  // e_eta is recomputed from scratch, not read off the model's derivation.
  const Derivation fresh = derive(b_, e0_, eta);
  ClausalTheory s = substitute(assignment_clauses(b_, fresh.states.back()), {{kTimeVar, nat_numeral(eta)}});
  return satisfies(*impl_->model, s);
}

bool derivation_consequence_check(const RuleBase& b, const FuzzyAssignment& e0, std::size_t eta, std::size_t t_max,
                                  const std::optional<Perturbation>& perturb) {
  return LemmaChecker(b, e0, t_max, perturb).check(eta);
}

// ---- reduction

Reduction reduce_to_unsat(const RuleBase& b, const FuzzyAssignment& e0, const ProblemSpec& p, std::size_t n0,
                          std::size_t horizon) {
  const std::size_t depth =
      p.kind == ProblemSpec::Kind::Reachability ? 0 : (p.kind == ProblemSpec::Kind::Stability ? 1 : p.k);
  if (horizon < depth)
    throw std::invalid_argument("horizon " + std::to_string(horizon) + " is smaller than the goal's successor depth " +
                                std::to_string(depth));
  DeductionProblem dp = build_deduction_problem(b, e0, p);
  const std::size_t n_domain_axioms = domain_axioms(working_signature()).size();

  Reduction r;
  r.horizon = horizon;
  r.n0 = n0;
  r.refutation = build_refutation_input(dp.formulas, dp.goal, n0);
  const auto& members = r.refutation.premises.members;
  for (std::size_t i = 0; i < members.size() && i < n_domain_axioms; ++i) r.clauses.add_all(members[i].clauses);
  r.clauses.add_all(dp.universe.positive());
  r.clauses.add_all(fuzzy_set_clauses(b));
  for (std::size_t i = n_domain_axioms; i < members.size(); ++i) r.clauses.add_all(members[i].clauses);
  r.clauses.add_all(dp.clauses);
  if (r.refutation.goal) r.clauses.add_all(r.refutation.goal->clauses);
  // Degenerate goals (constant after simplification) are carried by the
  // refutation input alone.
  if (!r.refutation.goal) r.clauses.add_all(r.refutation.clauses);

  for (std::size_t k = 0; k <= horizon; ++k) r.domain.push_back(nat_numeral(k));
  for (const auto& m : dp.universe.members()) r.domain.push_back(m);
  return r;
}

GroundTheory instantiate_reduction(const Reduction& r) {
  GroundTheory g = instantiate(r.clauses, r.domain);
  Signature sig = working_signature();
  std::vector<TermPtr> members;
  for (std::size_t i = r.horizon + 1; i < r.domain.size(); ++i) members.push_back(r.domain[i]);
  const std::size_t n_atoms = g.atoms.size();
  for (std::size_t a = 0; a < n_atoms; ++a) {
    FormulaPtr f = parse_formula(g.atoms[a], sig, {true});
    const std::string& p = f->name;
    if (p != reserved::nat && p != reserved::rat && p != reserved::time && p != reserved::uni) continue;
    auto num = decode_numeral(f->args.at(0));
    bool v = false;
    if (p == reserved::nat || p == reserved::time) {
      v = num && num->kind == Numeral::Kind::Nat;
    } else if (p == reserved::rat) {
      v = num && num->kind != Numeral::Kind::Nat;
    } else {
      for (const auto& m : members) v = v || term_equal(m, f->args[0]);
    }
    GSide lhs;
    lhs.kind = GSide::Kind::Atom;
    lhs.atoms = {static_cast<int>(a)};
    GSide rhs;
    rhs.kind = GSide::Kind::Const;
    rhs.value = TruthValue(v ? 1 : 0);
    g.clauses.push_back({GLiteral{lhs, Rel::Eq, rhs}});
  }
  return g;
}

}  // namespace gforge
