#include "gforge/semantics.hpp"

namespace gforge {

namespace detail {

std::vector<std::string> clause_free_vars(const OrderClause& c) {
  std::vector<std::string> all;
  for (const auto& l : c.literals()) {
    for (const auto& v : free_vars(l.lhs)) all.push_back(v);
    for (const auto& v : free_vars(l.rhs)) all.push_back(v);
  }
  return dedup_preserving_first_occurrence(all);
}

}  // namespace detail

Interpretation::Interpretation(int universe_size) {
  if (universe_size <= 0) throw std::invalid_argument("universe must be non-empty");
  for (int u = 0; u < universe_size; ++u) universe_.push_back(u);
}

void Interpretation::set_function(const std::string& f, const std::vector<int>& args, int value) {
  functions_[f][args] = value;
}

void Interpretation::set_predicate(const std::string& p, const std::vector<int>& args, const TruthValue& value) {
  if (!value.in_unit_interval()) throw std::invalid_argument("predicate value outside [0,1]");
  predicates_[p][args] = value;
}

int Interpretation::apply(const std::string& f, const std::vector<int>& args) const {
  auto it = functions_.find(f);
  if (it == functions_.end()) throw std::invalid_argument("undeclared function '" + f + "'");
  auto jt = it->second.find(args);
  if (jt == it->second.end()) throw std::invalid_argument("function table of '" + f + "' is not total");
  return jt->second;
}

TruthValue Interpretation::pred(const std::string& p, const std::vector<int>& args) const {
  auto it = predicates_.find(p);
  if (it == predicates_.end()) throw std::invalid_argument("undeclared predicate '" + p + "'");
  auto jt = it->second.find(args);
  if (jt == it->second.end()) throw std::invalid_argument("predicate table of '" + p + "' is not total");
  return jt->second;
}

TruthValue eval_truth(const FormulaPtr& f, const Interpretation& i, const ValueAssignment& e) {
  Env<Interpretation> env(e.begin(), e.end());
  return eval_formula(f, i, env);
}

bool check_model(const Interpretation& i, const ClausalTheory& s) { return satisfies(i, s); }

}  // namespace gforge
