// Exact rational truth values in [0,1] and the standard Goedel operators.
#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace gforge {

using Rational = boost::rational<std::int64_t>;

// An exact rational kept in lowest terms. The [0,1] range is checked where
// a value enters the language (truth constants, memberships); intermediate
// grid arithmetic may use the type freely.
class TruthValue {
 public:
  TruthValue() = default;
  TruthValue(std::int64_t n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  TruthValue(std::int64_t n, std::int64_t d) : q_(n, d) {}
  explicit TruthValue(const Rational& q) : q_(q) {}

  const Rational& rational() const { return q_; }
  std::int64_t num() const { return q_.numerator(); }
  std::int64_t den() const { return q_.denominator(); }
  bool in_unit_interval() const { return q_.numerator() >= 0 && q_.numerator() <= q_.denominator(); }
  bool is_zero() const { return q_.numerator() == 0; }
  bool is_one() const { return q_.numerator() == 1 && q_.denominator() == 1; }

  friend auto operator<=>(const TruthValue& a, const TruthValue& b) {
    if (a.q_ < b.q_) return std::strong_ordering::less;
    if (b.q_ < a.q_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const TruthValue& a, const TruthValue& b) { return a.q_ == b.q_; }

  friend TruthValue operator+(const TruthValue& a, const TruthValue& b) { return TruthValue(a.q_ + b.q_); }
  friend TruthValue operator-(const TruthValue& a, const TruthValue& b) { return TruthValue(a.q_ - b.q_); }
  friend TruthValue operator*(const TruthValue& a, const TruthValue& b) { return TruthValue(a.q_ * b.q_); }
  friend TruthValue operator/(const TruthValue& a, const TruthValue& b) { return TruthValue(a.q_ / b.q_); }

  // Decimal when the expansion terminates within 9 digits, "p/q" otherwise.
  std::string str() const;

  // Accepts "1", "0.3", ".5", "3/10". Throws std::invalid_argument.
  static TruthValue parse(const std::string& text);

 private:
  Rational q_{0};
};

std::ostream& operator<<(std::ostream& os, const TruthValue& v);

namespace g {

inline TruthValue sup(const TruthValue& a, const TruthValue& b) { return a < b ? b : a; }
inline TruthValue inf(const TruthValue& a, const TruthValue& b) { return a < b ? a : b; }
inline TruthValue residuum(const TruthValue& a, const TruthValue& b) { return a <= b ? TruthValue(1) : b; }
inline TruthValue negation(const TruthValue& a) { return a.is_zero() ? TruthValue(1) : TruthValue(0); }
inline TruthValue eqcirc(const TruthValue& a, const TruthValue& b) { return a == b ? TruthValue(1) : TruthValue(0); }
inline TruthValue prec(const TruthValue& a, const TruthValue& b) { return a < b ? TruthValue(1) : TruthValue(0); }
inline TruthValue delta(const TruthValue& a) { return a.is_one() ? TruthValue(1) : TruthValue(0); }
inline TruthValue biresiduum(const TruthValue& a, const TruthValue& b) { return inf(residuum(a, b), residuum(b, a)); }

}  // namespace g
}  // namespace gforge
