#include "smot/rational.hpp"

#include <cctype>

namespace smot {

std::string to_string(const Rational& r) {
  std::string num = numerator(r).str();
  if (denominator(r) == 1) return num;
  return num + "/" + denominator(r).str();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  // Trim surrounding whitespace.
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    s.erase(s.begin());
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("parse_rational: bad fraction '" + text + "'");
    Integer d(den);
    if (d == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    value = Rational(Integer(num), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) throw std::invalid_argument("parse_rational: bad decimal '" + text + "'");
    Integer scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rational(Integer(whole) * scale + Integer(frac.empty() ? "0" : frac), scale);
  } else {
    if (!all_digits(s)) throw std::invalid_argument("parse_rational: bad integer '" + text + "'");
    value = Rational(Integer(s));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace smot
