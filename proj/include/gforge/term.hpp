// First-order terms and the symbol signature.
#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gforge {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Variable(name) or Application(symbol, args); constants are zero-ary applications.
struct Term {
  enum class Kind { Var, App };
  Kind kind;
  std::string name;
  std::vector<TermPtr> args;

  bool is_var() const { return kind == Kind::Var; }
};

TermPtr var(std::string name);
TermPtr app(std::string symbol, std::vector<TermPtr> args = {});

bool term_equal(const TermPtr& a, const TermPtr& b);
std::string format_term(const TermPtr& t);
std::size_t size(const TermPtr& t);
bool is_ground(const TermPtr& t);
bool occurs(const std::string& x, const TermPtr& t);
void term_vars(const TermPtr& t, std::vector<std::string>& out);
TermPtr substitute(const TermPtr& t, const std::map<std::string, TermPtr>& bindings);

// Reserved vocabulary. Tool-generated predicate families carry a '$' prefix
// and use '.' as an internal separator so that they can never clash with
// user identifiers.
namespace reserved {
inline const std::string zero = "$z";      // z-tilde, the numeral zero
inline const std::string succ = "$s";      // s-tilde, successor
inline const std::string frac = "frac";
inline const std::string nfrac = "nfrac";  // the negative fraction symbol
inline const std::string carrier = "$f0";  // tuple carrier, never printed in output
inline const std::string nat = "nat";
inline const std::string rat = "rat";
inline const std::string time = "time";
inline const std::string uni = "uni";

std::string fresh_pred(std::size_t i, std::size_t j);
std::optional<std::pair<std::size_t, std::size_t>> fresh_index(const std::string& pred);
std::string set_pred(const std::string& set);                            // G-tilde_A
std::string var_pred(const std::string& var);                            // H-tilde_X
std::string rule_pred(const std::string& label, const std::string& var);  // H-tilde_X^r
bool is_reserved_name(const std::string& name);
}  // namespace reserved

// Arity maps for function and predicate symbols. Reserved names have fixed
// arities (except fresh predicates, whose arity is fixed at first use).
class Signature {
 public:
  Signature();

  // Throws std::invalid_argument on an arity clash or on a reserved name
  // when allow_reserved is false.
  void declare_function(const std::string& f, std::size_t arity, bool allow_reserved = false);
  void declare_predicate(const std::string& p, std::size_t arity, bool allow_reserved = false);

  std::optional<std::size_t> function_arity(const std::string& f) const;
  std::optional<std::size_t> predicate_arity(const std::string& p) const;
  bool is_constant(const std::string& f) const;

  const std::map<std::string, std::size_t>& functions() const { return functions_; }
  const std::map<std::string, std::size_t>& predicates() const { return predicates_; }

  // The numeral symbols z~, s~, frac, nfrac.
  static Signature minimal_numeric();

 private:
  std::map<std::string, std::size_t> functions_;
  std::map<std::string, std::size_t> predicates_;
};

}  // namespace gforge
