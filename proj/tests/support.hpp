// Shared helpers for the test suites: data paths and a seeded random
// formula generator.
#pragma once

#include "gforge/formula.hpp"
#include "gforge/term.hpp"
#include "gforge/truth_value.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gforge::check {

inline std::string data_path(const std::string& name) { return std::string(GFORGE_DATA_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GenOptions {
  std::vector<std::string> atoms = {"p", "q", "r"};
  std::vector<TruthValue> constants = {TruthValue(0), TruthValue(3, 10), TruthValue(1, 2), TruthValue(1)};
  std::size_t max_size = 60;
  bool unary = true;        // ! and D
  bool quantifiers = false;  // first-order atoms p(x), q(x,y) under forall/exists
  std::vector<std::string> vars = {"x", "y"};
};

// Random formulas of bounded size. Sizes are measured with gforge::size, so
// the bound holds exactly.
class FormulaGen {
 public:
  FormulaGen(std::uint32_t seed, GenOptions opts = {}) : rng_(seed), opts_(std::move(opts)) {}

  FormulaPtr next() {
    for (;;) {
      std::size_t budget = pick(1, opts_.max_size);
      FormulaPtr f = build(budget);
      if (size(f) <= opts_.max_size) return f;
    }
  }

  std::size_t pick(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }
  std::mt19937& rng() { return rng_; }

 private:
  FormulaPtr leaf() {
    if (pick(0, 3) == 0) return constant(opts_.constants[pick(0, opts_.constants.size() - 1)]);
    const std::size_t k = pick(0, opts_.atoms.size() - 1);
    const std::string& p = opts_.atoms[k];
    if (!opts_.quantifiers) return atom(p);
    // Arity is fixed per predicate: 1, 2, 1, 2, ...
    std::vector<TermPtr> args;
    for (std::size_t i = 0; i < 1 + k % 2; ++i) args.push_back(var(opts_.vars[pick(0, opts_.vars.size() - 1)]));
    return atom(p, args);
  }

  FormulaPtr build(std::size_t budget) {
    if (budget <= 1) return leaf();
    const std::size_t kinds = opts_.quantifiers ? 10 : 8;
    std::size_t k = pick(0, kinds - 1);
    if (!opts_.unary && k < 2) k = 2 + pick(0, kinds - 3);
    switch (k) {
      case 0:
        return neg(build(budget - 1));
      case 1:
        return delta(build(budget - 1));
      case 8:
      case 9: {
        const std::string& x = opts_.vars[pick(0, opts_.vars.size() - 1)];
        FormulaPtr body = build(budget - 1);
        return k == 8 ? forall(x, body) : exists(x, body);
      }
      default: {
        static const Op ops[] = {Op::And, Op::Or, Op::Imp, Op::Iff, Op::Eq, Op::Prec};
        std::size_t left = pick(1, budget - 2 < 1 ? 1 : budget - 2);
        return binary(ops[k - 2], build(left), build(budget - 1 - left));
      }
    }
  }

  std::mt19937 rng_;
  GenOptions opts_;
};

// Reference evaluator for quantifier-free formulas over 0-ary atoms,
// written directly from the operator definitions.
inline Rational ref_eval(const FormulaPtr& f, const std::map<std::string, Rational>& v) {
  const Rational zero(0), one(1);
  switch (f->op) {
    case Op::Atom:
      return v.at(f->name);
    case Op::Const:
      return f->value.rational();
    case Op::Neg:
      return ref_eval(f->lhs, v) == zero ? one : zero;
    case Op::Delta:
      return ref_eval(f->lhs, v) == one ? one : zero;
    default:
      break;
  }
  if (f->is_quantifier()) throw std::invalid_argument("ref_eval: quantifier");
  const Rational a = ref_eval(f->lhs, v), b = ref_eval(f->rhs, v);
  switch (f->op) {
    case Op::And:
      return std::min(a, b);
    case Op::Or:
      return std::max(a, b);
    case Op::Imp:
      return a <= b ? one : b;
    case Op::Iff:
      return a == b ? one : std::min(a, b);
    case Op::Eq:
      return a == b ? one : zero;
    case Op::Prec:
      return a < b ? one : zero;
    default:
      throw std::logic_error("ref_eval");
  }
}

// Every valuation of `atoms` over `values`.
inline std::vector<std::map<std::string, Rational>> valuations(const std::vector<std::string>& atoms,
                                                               const std::vector<Rational>& values) {
  std::vector<std::map<std::string, Rational>> out{{}};
  for (const auto& p : atoms) {
    std::vector<std::map<std::string, Rational>> next;
    for (const auto& m : out)
      for (const auto& q : values) {
        auto n = m;
        n[p] = q;
        next.push_back(std::move(n));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace gforge::check
