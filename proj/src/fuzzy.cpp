#include "gforge/fuzzy.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gforge {

UniverseSpec::UniverseSpec(std::vector<Rational> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("universe is empty");
  std::set<Rational> seen;
  for (const auto& u : elements_)
    if (!seen.insert(u).second) throw std::invalid_argument("duplicate universe element " + TruthValue(u).str());
}

std::optional<std::size_t> UniverseSpec::index_of(const Rational& u) const {
  auto it = std::find(elements_.begin(), elements_.end(), u);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

Membership constant_set(std::size_t n, const TruthValue& c) { return Membership(n, c); }

TruthValue height(const Membership& a) {
  TruthValue h(0);
  for (const auto& v : a) h = g::sup(h, v);
  return h;
}

Membership cut(const TruthValue& c, const Membership& a) {
  Membership out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = g::inf(c, a[i]);
  return out;
}

namespace {

template <class F>
Membership pointwise(const Membership& a, const Membership& b, F f) {
  if (a.size() != b.size()) throw std::invalid_argument("fuzzy sets over different universes");
  Membership out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f(a[i], b[i]);
  return out;
}

}  // namespace

Membership set_union(const Membership& a, const Membership& b) { return pointwise(a, b, g::sup); }
Membership set_intersect(const Membership& a, const Membership& b) { return pointwise(a, b, g::inf); }

std::string format_membership(const Membership& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += " ";
    s += m[i].str();
  }
  return s + ")";
}

void RuleBase::validate() const {
  const std::size_t n = universe.size();
  if (n == 0) throw std::invalid_argument("rule base has no universe");
  std::set<std::string> names;
  for (const auto& s : sets) {
    if (!names.insert(s.name).second) throw std::invalid_argument("duplicate fuzzy set " + s.name);
    if (s.membership.size() != n) throw std::invalid_argument("fuzzy set " + s.name + " is not total");
    for (const auto& v : s.membership)
      if (!v.in_unit_interval()) throw std::invalid_argument("membership outside [0,1] in " + s.name);
  }
  std::set<std::string> vars;
  for (const auto& x : variables)
    if (!vars.insert(x).second) throw std::invalid_argument("duplicate variable " + x);
  if (rules.empty()) throw std::invalid_argument("rule base has no rules");
  std::set<std::string> labels;
  auto check = [&](const FuzzyRule& r, const Antecedent& a) {
    if (!vars.count(a.var)) throw std::invalid_argument("rule " + r.label + ": unknown variable " + a.var);
    if (!names.count(a.set)) throw std::invalid_argument("rule " + r.label + ": unknown fuzzy set " + a.set);
  };
  for (const auto& r : rules) {
    if (!labels.insert(r.label).second) throw std::invalid_argument("duplicate rule label " + r.label);
    if (r.antecedents.empty()) throw std::invalid_argument("rule " + r.label + " has no antecedent");
    for (const auto& a : r.antecedents) check(r, a);
    check(r, r.consequent);
  }
}

const FuzzySet& RuleBase::set(const std::string& name) const {
  for (const auto& s : sets)
    if (s.name == name) return s;
  throw std::out_of_range("unknown fuzzy set " + name);
}

bool RuleBase::has_set(const std::string& name) const {
  return std::any_of(sets.begin(), sets.end(), [&](const FuzzySet& s) { return s.name == name; });
}

std::size_t RuleBase::var_index(const std::string& name) const {
  auto it = std::find(variables.begin(), variables.end(), name);
  if (it == variables.end()) throw std::out_of_range("unknown variable " + name);
  return static_cast<std::size_t>(it - variables.begin());
}

bool RuleBase::has_var(const std::string& name) const {
  return std::find(variables.begin(), variables.end(), name) != variables.end();
}

RuleBase RuleBase::without_rules(const std::vector<std::string>& labels) const {
  RuleBase out = *this;
  std::erase_if(out.rules, [&](const FuzzyRule& r) {
    return std::find(labels.begin(), labels.end(), r.label) != labels.end();
  });
  return out;
}

FuzzyAssignment make_assignment(const RuleBase& b, const std::map<std::string, std::string>& var_to_set) {
  for (const auto& [x, s] : var_to_set) {
    if (!b.has_var(x)) throw std::invalid_argument("unknown variable " + x);
    if (!b.has_set(s)) throw std::invalid_argument("unknown fuzzy set " + s);
  }
  FuzzyAssignment e;
  for (const auto& x : b.variables) {
    auto it = var_to_set.find(x);
    if (it == var_to_set.end()) throw std::invalid_argument("variable " + x + " is unassigned");
    e.push_back(b.set(it->second).membership);
  }
  return e;
}

TruthValue firing_degree(const RuleBase& b, const FuzzyRule& r, const FuzzyAssignment& e) {
  TruthValue d(1);
  for (const auto& a : r.antecedents)
    d = g::inf(d, height(set_intersect(e[b.var_index(a.var)], b.set(a.set).membership)));
  return d;
}

Membership eval_rule(const RuleBase& b, const FuzzyRule& r, const FuzzyAssignment& e) {
  return cut(firing_degree(b, r, e), b.set(r.consequent.set).membership);
}

Membership eval_var(const RuleBase& b, const FuzzyAssignment& e, const std::string& x) {
  Membership acc = constant_set(b.universe.size(), TruthValue(0));
  for (const auto& r : b.rules)
    if (r.consequent.var == x) acc = set_union(acc, eval_rule(b, r, e));
  return acc;
}

FuzzyAssignment step(const RuleBase& b, const FuzzyAssignment& e) {
  FuzzyAssignment next;
  next.reserve(b.variables.size());
  for (const auto& x : b.variables) next.push_back(eval_var(b, e, x));
  return next;
}

Derivation derive(const RuleBase& b, const FuzzyAssignment& e0, std::size_t horizon) {
  if (e0.size() != b.variables.size()) throw std::invalid_argument("assignment does not cover the variables");
  std::set<TruthValue> closure{TruthValue(0)};
  for (const auto& s : b.sets) closure.insert(s.membership.begin(), s.membership.end());
  for (const auto& m : e0) closure.insert(m.begin(), m.end());

  Derivation d;
  d.states.push_back(e0);
  for (std::size_t i = 0; i < horizon; ++i) {
    FuzzyAssignment next = step(b, d.states.back());
    for (const auto& m : next)
      for (const auto& v : m)
        if (!closure.count(v)) throw std::logic_error("derived membership " + v.str() + " escapes the value closure");
    d.states.push_back(std::move(next));
  }
  return d;
}

std::string format_state(const FuzzyAssignment& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += " ";
    s += format_membership(e[i]);
  }
  return s + ")";
}

}  // namespace gforge
