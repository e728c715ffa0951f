#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace smot {

// Exact arbitrary-precision rational scalar.  Every quantity in the library
// (atom positions, weights, potentials, curve values) is a Rational; nothing
// is ever rounded.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

// Max of the two positive parts used all over: (a)^+ = max(a, 0).
inline Rational pos(const Rational& a) { return a > 0 ? a : Rational(0); }

// Extended rational: a rational number or one of the sentinels -inf / +inf.
// Used where the underlying quantity genuinely takes infinite values
// (support bounds of the zero measure, contact points of a function that
// touches its hull nowhere on one side, the martingale threshold x*).
class Extended {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  Extended() : kind_(Kind::Finite), value_(0) {}
  Extended(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {}
  Extended(long v) : kind_(Kind::Finite), value_(v) {}

  static Extended neg_inf() { return Extended(Kind::NegInf); }
  static Extended pos_inf() { return Extended(Kind::PosInf); }

  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }

  // Finite value; throws on a sentinel so silent misuse is impossible.
  const Rational& finite() const {
    if (!is_finite()) throw std::logic_error("Extended: sentinel has no finite value");
    return value_;
  }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::Finite || a.value_ == b.value_;
  }
  friend bool operator!=(const Extended& a, const Extended& b) { return !(a == b); }
  friend bool operator<(const Extended& a, const Extended& b) {
    if (a.kind_ == b.kind_) return a.kind_ == Kind::Finite && a.value_ < b.value_;
    if (a.kind_ == Kind::NegInf) return true;
    if (a.kind_ == Kind::PosInf) return false;
    return b.kind_ == Kind::PosInf;
  }
  friend bool operator<=(const Extended& a, const Extended& b) { return a < b || a == b; }
  friend bool operator>(const Extended& a, const Extended& b) { return b < a; }
  friend bool operator>=(const Extended& a, const Extended& b) { return b <= a; }

  std::string str() const;

 private:
  explicit Extended(Kind k) : kind_(k), value_(0) {}
  Kind kind_;
  Rational value_;
};

// Serialization helpers shared by the CLI and the tests.  Rationals render
// as "p" or "p/q"; parsing additionally accepts finite decimal strings
// ("0.25" -> 1/4), converted exactly.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

inline std::string Extended::str() const {
  if (is_neg_inf()) return "-inf";
  if (is_pos_inf()) return "+inf";
  return to_string(value_);
}

}  // namespace smot
