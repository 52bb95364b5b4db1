#include "gforge/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace gforge {

TermPtr var(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  return std::make_shared<const Term>(Term{Term::Kind::Var, std::move(name), {}});
}

TermPtr app(std::string symbol, std::vector<TermPtr> args) {
  return std::make_shared<const Term>(Term{Term::Kind::App, std::move(symbol), std::move(args)});
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->name != b->name || a->args.size() != b->args.size()) return false;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!term_equal(a->args[i], b->args[i])) return false;
  return true;
}

std::string format_term(const TermPtr& t) {
  if (t->is_var() || t->args.empty()) return t->name;
  std::string s = t->name + "(";
  for (std::size_t i = 0; i < t->args.size(); ++i) {
    if (i) s += ",";
    s += format_term(t->args[i]);
  }
  return s + ")";
}

std::size_t size(const TermPtr& t) {
  std::size_t n = 1;
  for (const auto& a : t->args) n += size(a);
  return n;
}

bool is_ground(const TermPtr& t) {
  if (t->is_var()) return false;
  return std::all_of(t->args.begin(), t->args.end(), [](const TermPtr& a) { return is_ground(a); });
}

bool occurs(const std::string& x, const TermPtr& t) {
  if (t->is_var()) return t->name == x;
  return std::any_of(t->args.begin(), t->args.end(), [&](const TermPtr& a) { return occurs(x, a); });
}

void term_vars(const TermPtr& t, std::vector<std::string>& out) {
  if (t->is_var()) {
    out.push_back(t->name);
    return;
  }
  for (const auto& a : t->args) term_vars(a, out);
}

TermPtr substitute(const TermPtr& t, const std::map<std::string, TermPtr>& bindings) {
  if (t->is_var()) {
    auto it = bindings.find(t->name);
    return it == bindings.end() ? t : it->second;
  }
  if (t->args.empty()) return t;
  std::vector<TermPtr> args;
  args.reserve(t->args.size());
  bool changed = false;
  for (const auto& a : t->args) {
    args.push_back(substitute(a, bindings));
    changed = changed || args.back() != a;
  }
  return changed ? app(t->name, std::move(args)) : t;
}

namespace reserved {

std::string fresh_pred(std::size_t i, std::size_t j) { return "$p." + std::to_string(i) + "." + std::to_string(j); }

std::optional<std::pair<std::size_t, std::size_t>> fresh_index(const std::string& pred) {
  if (pred.rfind("$p.", 0) != 0) return std::nullopt;
  auto dot = pred.find('.', 3);
  if (dot == std::string::npos) return std::nullopt;
  try {
    std::size_t used = 0;
    std::string a = pred.substr(3, dot - 3);
    std::string b = pred.substr(dot + 1);
    if (a.empty() || b.empty()) return std::nullopt;
    std::size_t i = std::stoul(a, &used);
    if (used != a.size()) return std::nullopt;
    std::size_t j = std::stoul(b, &used);
    if (used != b.size()) return std::nullopt;
    return std::make_pair(i, j);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string set_pred(const std::string& set) { return "$G." + set; }
std::string var_pred(const std::string& v) { return "$H." + v; }
std::string rule_pred(const std::string& label, const std::string& v) { return "$Hr." + label + "." + v; }

bool is_reserved_name(const std::string& name) {
  if (!name.empty() && name[0] == '$') return true;
  return name == frac || name == nfrac || name == nat || name == rat || name == time || name == uni;
}

}  // namespace reserved

namespace {

// Fixed arity of a reserved symbol, or nullopt when the family allows any arity.
std::optional<std::size_t> reserved_function_arity(const std::string& f) {
  if (f == reserved::zero) return 0;
  if (f == reserved::succ) return 1;
  if (f == reserved::frac || f == reserved::nfrac) return 2;
  return std::nullopt;
}

std::optional<std::size_t> reserved_predicate_arity(const std::string& p) {
  if (p == reserved::nat || p == reserved::rat || p == reserved::time || p == reserved::uni) return 1;
  if (p.rfind("$G.", 0) == 0) return 1;
  if (p.rfind("$H.", 0) == 0 || p.rfind("$Hr.", 0) == 0) return 2;
  return std::nullopt;
}

void declare(std::map<std::string, std::size_t>& table, const std::string& name, std::size_t arity,
             std::optional<std::size_t> fixed, bool allow_reserved, const char* what) {
  if (reserved::is_reserved_name(name)) {
    if (!allow_reserved) throw std::invalid_argument(std::string("reserved ") + what + " name '" + name + "'");
    if (fixed && *fixed != arity)
      throw std::invalid_argument(std::string(what) + " '" + name + "' has arity " + std::to_string(*fixed) +
                                  ", used with " + std::to_string(arity));
  }
  auto [it, inserted] = table.emplace(name, arity);
  if (!inserted && it->second != arity)
    throw std::invalid_argument(std::string("arity mismatch for ") + what + " '" + name + "': declared " +
                                std::to_string(it->second) + ", used with " + std::to_string(arity));
}

}  // namespace

Signature::Signature() = default;

void Signature::declare_function(const std::string& f, std::size_t arity, bool allow_reserved) {
  declare(functions_, f, arity, reserved_function_arity(f), allow_reserved, "function");
}

void Signature::declare_predicate(const std::string& p, std::size_t arity, bool allow_reserved) {
  declare(predicates_, p, arity, reserved_predicate_arity(p), allow_reserved, "predicate");
}

std::optional<std::size_t> Signature::function_arity(const std::string& f) const {
  auto it = functions_.find(f);
  if (it == functions_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Signature::predicate_arity(const std::string& p) const {
  auto it = predicates_.find(p);
  if (it == predicates_.end()) return std::nullopt;
  return it->second;
}

bool Signature::is_constant(const std::string& f) const {
  auto a = function_arity(f);
  return a && *a == 0;
}

Signature Signature::minimal_numeric() {
  Signature s;
  s.declare_function(reserved::zero, 0, true);
  s.declare_function(reserved::succ, 1, true);
  s.declare_function(reserved::frac, 2, true);
  s.declare_function(reserved::nfrac, 2, true);
  return s;
}

}  // namespace gforge
