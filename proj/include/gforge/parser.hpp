// Concrete syntax for formulas.
//
//   formula := iff
//   iff     := imp ("<->" imp)*          left associative
//   imp     := or ("->" imp)?            right associative
//   or      := and ("|" or)?             right associative
//   and     := cmp ("&" and)?            right associative
//   cmp     := unary (("~" | "<") unary)?
//   unary   := "!" unary | "D" unary | ("forall" | "exists") var unary
//            | atom | number | "(" formula ")"
//
// A bare identifier in argument position is a constant symbol when the
// signature declares it as zero-ary, otherwise a variable.
#pragma once

#include "gforge/formula.hpp"
#include "gforge/term.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gforge {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error("parse error at " + std::to_string(pos) + ": " + msg), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

struct ParseOptions {
  // Accept '$'-prefixed and other reserved symbols (tool-generated text).
  bool allow_reserved = false;
};

// Unknown function and predicate symbols are declared in `sig` on first use.
FormulaPtr parse_formula(const std::string& text, Signature& sig, ParseOptions opts = {});
FormulaPtr parse_formula(const std::string& text, ParseOptions opts = {});

TermPtr parse_term(const std::string& text, Signature& sig, ParseOptions opts = {});

}  // namespace gforge
