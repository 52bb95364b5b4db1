#include "gforge/truth_value.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace gforge {

namespace {

std::int64_t parse_digits(const std::string& s, const std::string& whole) {
  if (s.empty()) throw std::invalid_argument("malformed number '" + whole + "'");
  std::int64_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("malformed number '" + whole + "'");
    if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) throw std::invalid_argument("number too large '" + whole + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

std::string TruthValue::str() const {
  std::int64_t n = q_.numerator();
  std::int64_t d = q_.denominator();
  std::string sign = n < 0 ? "-" : "";
  if (n < 0) n = -n;
  if (d == 1) return sign + std::to_string(n);
  std::int64_t rest = d;
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  int digits = std::max(twos, fives);
  if (rest != 1 || digits > 9) return sign + std::to_string(n) + "/" + std::to_string(d);
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  std::int64_t scaled = n * (scale / d);
  std::string frac = std::to_string(scaled % scale);
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return sign + std::to_string(scaled / scale) + "." + frac;
}

TruthValue TruthValue::parse(const std::string& text) {
  if (auto slash = text.find('/'); slash != std::string::npos) {
    std::int64_t n = parse_digits(text.substr(0, slash), text);
    std::int64_t d = parse_digits(text.substr(slash + 1), text);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return TruthValue(n, d);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return TruthValue(parse_digits(text, text));
  std::string ip = text.substr(0, dot);
  std::string fp = text.substr(dot + 1);
  if (ip.empty() && fp.empty()) throw std::invalid_argument("malformed number '" + text + "'");
  if (fp.size() > 17) throw std::invalid_argument("too many decimals in '" + text + "'");
  std::int64_t whole = ip.empty() ? 0 : parse_digits(ip, text);
  std::int64_t frac = fp.empty() ? 0 : parse_digits(fp, text);
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
  return TruthValue(Rational(whole) + Rational(frac, scale));
}

std::ostream& operator<<(std::ostream& os, const TruthValue& v) { return os << v.str(); }

}  // namespace gforge
