#include "gforge/frb_parser.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace gforge {

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == ';' || c == ':' || c == ',' || c == '=') {
      out.push_back({std::string(1, c), line});
      ++i;
    } else {
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != ';' &&
             text[j] != ':' && text[j] != ',' && text[j] != '=' && text[j] != '#')
        ++j;
      out.push_back({text.substr(i, j - i), line});
      i = j;
    }
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

Rational parse_element(const std::string& s, std::size_t line) {
  try {
    if (!s.empty() && s[0] == '-') return -TruthValue::parse(s.substr(1)).rational();
    return TruthValue::parse(s).rational();
  } catch (const std::invalid_argument& e) {
    throw FrbError(e.what(), line);
  }
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  FrbFile run() {
    FrbFile f;
    bool have_universe = false;
    while (pos_ < toks_.size()) {
      const Token& kw = next();
      if (kw.text == "universe") {
        if (have_universe) throw FrbError("universe declared twice", kw.line);
        std::vector<Rational> elems;
        while (peek() != ";") elems.push_back(parse_element(next().text, kw.line));
        expect(";");
        try {
          f.base.universe = UniverseSpec(std::move(elems));
        } catch (const std::invalid_argument& e) {
          throw FrbError(e.what(), kw.line);
        }
        have_universe = true;
      } else if (kw.text == "set") {
        if (!have_universe) throw FrbError("set declared before the universe", kw.line);
        FuzzySet s;
        s.name = ident();
        expect("=");
        const std::size_t n = f.base.universe.size();
        s.membership.assign(n, TruthValue(0));
        std::vector<bool> seen(n, false);
        while (peek() != ";") {
          const Token& t = next();
          auto slash = t.text.find('/');
          if (slash == std::string::npos) throw FrbError("expected membership/element, got '" + t.text + "'", t.line);
          TruthValue m;
          try {
            m = TruthValue::parse(t.text.substr(0, slash));
          } catch (const std::invalid_argument& e) {
            throw FrbError(e.what(), t.line);
          }
          if (!m.in_unit_interval()) throw FrbError("membership outside [0,1]: " + t.text, t.line);
          auto idx = f.base.universe.index_of(parse_element(t.text.substr(slash + 1), t.line));
          if (!idx) throw FrbError("element not in the universe: " + t.text, t.line);
          if (seen[*idx]) throw FrbError("element given twice in set " + s.name, t.line);
          seen[*idx] = true;
          s.membership[*idx] = m;
        }
        expect(";");
        for (bool b : seen)
          if (!b) throw FrbError("fuzzy set " + s.name + " is not total over the universe", kw.line);
        f.base.sets.push_back(std::move(s));
      } else if (kw.text == "var") {
        while (peek() != ";") f.base.variables.push_back(ident());
        expect(";");
      } else if (kw.text == "rule") {
        FuzzyRule r;
        r.label = ident();
        expect(":");
        expect("if");
        r.antecedents.push_back(clause());
        while (peek() == "and") {
          next();
          r.antecedents.push_back(clause());
        }
        expect("then");
        r.consequent = clause();
        expect(";");
        f.base.rules.push_back(std::move(r));
      } else if (kw.text == "init" || kw.text == "target") {
        for (;;) {
          std::string x = ident();
          expect("=");
          std::string s = ident();
          if (kw.text == "init") {
            if (!f.init.emplace(x, s).second) throw FrbError("variable " + x + " initialised twice", kw.line);
          } else {
            f.targets.emplace_back(x, s);
          }
          if (peek() != ",") break;
          next();
        }
        expect(";");
      } else {
        throw FrbError("unknown statement '" + kw.text + "'", kw.line);
      }
    }
    if (!have_universe) throw FrbError("missing universe declaration", last_line());
    try {
      f.base.validate();
    } catch (const std::invalid_argument& e) {
      throw FrbError(e.what(), last_line());
    }
    std::set<std::string> tv;
    for (const auto& [x, s] : f.targets) {
      if (!f.base.has_var(x)) throw FrbError("target names unknown variable " + x, last_line());
      if (!f.base.has_set(s)) throw FrbError("target names unknown fuzzy set " + s, last_line());
      if (!tv.insert(x).second) throw FrbError("variable " + x + " targeted twice", last_line());
    }
    for (const auto& [x, s] : f.init) {
      if (!f.base.has_var(x)) throw FrbError("init names unknown variable " + x, last_line());
      if (!f.base.has_set(s)) throw FrbError("init names unknown fuzzy set " + s, last_line());
    }
    return f;
  }

 private:
  const Token& next() {
    if (pos_ >= toks_.size()) throw FrbError("unexpected end of input", last_line());
    return toks_[pos_++];
  }
  std::string peek() const { return pos_ < toks_.size() ? toks_[pos_].text : std::string(); }
  void expect(const std::string& s) {
    if (pos_ >= toks_.size()) throw FrbError("expected '" + s + "' at end of input", last_line());
    const Token& t = next();
    if (t.text != s) throw FrbError("expected '" + s + "', got '" + t.text + "'", t.line);
  }
  std::string ident() {
    const Token& t = next();
    if (!is_identifier(t.text)) throw FrbError("expected identifier, got '" + t.text + "'", t.line);
    return t.text;
  }
  Antecedent clause() {
    Antecedent a;
    a.var = ident();
    expect("is");
    a.set = ident();
    return a;
  }
  std::size_t last_line() const { return toks_.empty() ? 1 : toks_.back().line; }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

FrbFile parse_frb(const std::string& text) { return Parser(tokenize(text)).run(); }

FrbFile load_frb(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_frb(ss.str());
}

}  // namespace gforge
