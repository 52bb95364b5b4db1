#include "gforge/parser.hpp"

#include <cctype>
#include <vector>

namespace gforge {

namespace {

enum class Tok { Ident, Number, LParen, RParen, Comma, Bang, Amp, Bar, Arrow, Iff, Tilde, Less, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (ident_start(c) || (c == '$' && i + 1 < s.size() && ident_start(s[i + 1]))) {
      // Reserved names may use '.' as an internal separator.
      bool reserved = c == '$';
      ++i;
      while (i < s.size() && (ident_char(s[i]) || (reserved && s[i] == '.'))) ++i;
      out.push_back({Tok::Ident, s.substr(start, i - start), start});
      continue;
    }
    if (digit(c) || (c == '.' && i + 1 < s.size() && digit(s[i + 1]))) {
      while (i < s.size() && digit(s[i])) ++i;
      if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && digit(s[i])) ++i;
      } else if (i < s.size() && s[i] == '/') {
        ++i;
        while (i < s.size() && digit(s[i])) ++i;
      }
      out.push_back({Tok::Number, s.substr(start, i - start), start});
      continue;
    }
    auto two = s.compare(i, 2, "->") == 0;
    auto three = s.compare(i, 3, "<->") == 0;
    if (three) {
      out.push_back({Tok::Iff, "<->", start});
      i += 3;
      continue;
    }
    if (two) {
      out.push_back({Tok::Arrow, "->", start});
      i += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      case '!': k = Tok::Bang; break;
      case '&': k = Tok::Amp; break;
      case '|': k = Tok::Bar; break;
      case '~': k = Tok::Tilde; break;
      case '<': k = Tok::Less; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({k, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, Signature& sig, ParseOptions opts) : toks_(lex(text)), sig_(sig), opts_(opts) {}

  FormulaPtr formula_to_end() {
    FormulaPtr f = parse_iff();
    expect_end();
    return f;
  }

  TermPtr term_to_end() {
    TermPtr t = parse_term();
    expect_end();
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) throw ParseError(std::string("expected ") + what, peek().pos);
  }
  void expect_end() {
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
  }

  static bool is_keyword(const std::string& s) { return s == "forall" || s == "exists" || s == "D"; }

  void check_name(const Token& t) {
    if (!opts_.allow_reserved && reserved::is_reserved_name(t.text))
      throw ParseError("reserved symbol '" + t.text + "'", t.pos);
  }

  FormulaPtr parse_iff() {
    FormulaPtr f = parse_imp();
    while (accept(Tok::Iff)) f = iff(f, parse_imp());
    return f;
  }

  FormulaPtr parse_imp() {
    FormulaPtr f = parse_or();
    if (accept(Tok::Arrow)) return imp(f, parse_imp());
    return f;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    if (accept(Tok::Bar)) return disj(f, parse_or());
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_cmp();
    if (accept(Tok::Amp)) return conj(f, parse_and());
    return f;
  }

  FormulaPtr parse_cmp() {
    FormulaPtr f = parse_unary();
    Tok k = peek().kind;
    if (k != Tok::Tilde && k != Tok::Less) return f;
    ++pos_;
    FormulaPtr g = parse_unary();
    if (peek().kind == Tok::Tilde || peek().kind == Tok::Less)
      throw ParseError("comparison operators do not associate; add parentheses", peek().pos);
    return k == Tok::Tilde ? eqc(f, g) : prec(f, g);
  }

  FormulaPtr parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Bang:
        ++pos_;
        return neg(parse_unary());
      case Tok::LParen: {
        ++pos_;
        FormulaPtr f = parse_iff();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Number: {
        ++pos_;
        TruthValue v;
        try {
          v = TruthValue::parse(t.text);
        } catch (const std::exception& e) {
          throw ParseError(e.what(), t.pos);
        }
        if (!v.in_unit_interval()) throw ParseError("truth constant " + t.text + " outside [0,1]", t.pos);
        return constant(v);
      }
      case Tok::Ident: {
        if (t.text == "D") {
          ++pos_;
          return delta(parse_unary());
        }
        if (t.text == "forall" || t.text == "exists") {
          ++pos_;
          const Token& v = next();
          if (v.kind != Tok::Ident || is_keyword(v.text)) throw ParseError("expected a variable", v.pos);
          if (sig_.function_arity(v.text)) throw ParseError("'" + v.text + "' is a function symbol", v.pos);
          FormulaPtr body = parse_unary();
          return t.text == "forall" ? forall(v.text, body) : exists(v.text, body);
        }
        return parse_atom();
      }
      default:
        throw ParseError(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'", t.pos);
    }
  }

  FormulaPtr parse_atom() {
    const Token& t = next();
    check_name(t);
    std::vector<TermPtr> args;
    if (accept(Tok::LParen)) args = parse_args();
    declare(t, args.size(), /*predicate=*/true);
    return atom(t.text, std::move(args));
  }

  std::vector<TermPtr> parse_args() {
    std::vector<TermPtr> args;
    if (peek().kind == Tok::RParen) throw ParseError("empty argument list", peek().pos);
    do {
      args.push_back(parse_term());
    } while (accept(Tok::Comma));
    expect(Tok::RParen, "')'");
    return args;
  }

  TermPtr parse_term() {
    const Token& t = next();
    if (t.kind != Tok::Ident || is_keyword(t.text)) throw ParseError("expected a term", t.pos);
    check_name(t);
    if (accept(Tok::LParen)) {
      auto args = parse_args();
      declare(t, args.size(), /*predicate=*/false);
      return app(t.text, std::move(args));
    }
    if (sig_.is_constant(t.text) || t.text == reserved::zero) {
      declare(t, 0, false);
      return app(t.text);
    }
    if (sig_.function_arity(t.text)) throw ParseError("function '" + t.text + "' needs arguments", t.pos);
    return var(t.text);
  }

  void declare(const Token& t, std::size_t arity, bool predicate) {
    try {
      if (predicate)
        sig_.declare_predicate(t.text, arity, opts_.allow_reserved);
      else
        sig_.declare_function(t.text, arity, opts_.allow_reserved);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Signature& sig_;
  ParseOptions opts_;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text, Signature& sig, ParseOptions opts) {
  return Parser(text, sig, opts).formula_to_end();
}

FormulaPtr parse_formula(const std::string& text, ParseOptions opts) {
  Signature sig = Signature::minimal_numeric();
  return parse_formula(text, sig, opts);
}

TermPtr parse_term(const std::string& text, Signature& sig, ParseOptions opts) {
  return Parser(text, sig, opts).term_to_end();
}

}  // namespace gforge
