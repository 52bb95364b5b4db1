// Order literals, order clauses and clausal theories.
#pragma once

#include "gforge/formula.hpp"
#include "gforge/parser.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace gforge {

enum class Rel { Eq, Prec };

// A side is an atom, a truth constant or a quantified atom.
bool is_side(const FormulaPtr& f);

struct OrderLiteral {
  FormulaPtr lhs;
  Rel rel;
  FormulaPtr rhs;
};

// Validates both sides and returns the canonical form.
OrderLiteral make_literal(FormulaPtr lhs, Rel rel, FormulaPtr rhs);
OrderLiteral lit_eq(FormulaPtr lhs, FormulaPtr rhs);
OrderLiteral lit_prec(FormulaPtr lhs, FormulaPtr rhs);

// For a ~-literal the sides are ordered atoms < quantified atoms < constants,
// ties broken by printed form; <-literals are returned unchanged.
OrderLiteral canonical_literal(const OrderLiteral& l);

std::string format_literal(const OrderLiteral& l);
std::size_t size(const OrderLiteral& l);
bool literal_equal(const OrderLiteral& a, const OrderLiteral& b);

// A finite set of literals, kept in insertion order without duplicates.
class OrderClause {
 public:
  OrderClause() = default;
  OrderClause(std::initializer_list<OrderLiteral> lits);
  explicit OrderClause(const std::vector<OrderLiteral>& lits);

  void add(const OrderLiteral& l);
  const std::vector<OrderLiteral>& literals() const { return lits_; }
  bool empty() const { return lits_.empty(); }
  std::size_t size() const { return lits_.size(); }

  // Order-independent identity used for set semantics.
  const std::string& key() const { return key_; }
  friend bool operator==(const OrderClause& a, const OrderClause& b) { return a.key_ == b.key_; }

 private:
  void rebuild_key();
  std::vector<OrderLiteral> lits_;
  std::set<std::string> lit_keys_;
  std::string key_;
};

std::string format_clause(const OrderClause& c);
std::size_t size(const OrderClause& c);

// A finite set of clauses, kept in insertion order without duplicates.
class ClausalTheory {
 public:
  void add(const OrderClause& c);
  void add_all(const ClausalTheory& other);
  const std::vector<OrderClause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  bool contains(const OrderClause& c) const { return keys_.count(c.key()) != 0; }
  bool contains_empty_clause() const;

  friend bool operator==(const ClausalTheory& a, const ClausalTheory& b) { return a.keys_ == b.keys_; }

 private:
  std::vector<OrderClause> clauses_;
  std::set<std::string> keys_;
};

// Sum of literal sizes over all clauses.
std::size_t total_size(const ClausalTheory& s);

std::string format_theory(const ClausalTheory& s);

// Truth constants occurring in a theory.
std::vector<TruthValue> tcons(const ClausalTheory& s);

// Predicate symbols occurring in a clause, including inside quantified atoms.
std::set<std::string> preds(const OrderClause& c);

ClausalTheory substitute(const ClausalTheory& s, const std::map<std::string, TermPtr>& bindings);

// One clause per line, literals separated by '|', "[]" for the empty clause.
// Blank lines and lines starting with '#' are skipped.
OrderClause parse_clause(const std::string& line, Signature& sig, ParseOptions opts = {true});
ClausalTheory parse_theory(const std::string& text, Signature& sig, ParseOptions opts = {true});

}  // namespace gforge
