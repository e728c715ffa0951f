#include "smot/measure.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace smot {

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) {
  std::map<Rational, Rational> merged;
  for (auto& a : atoms) {
    if (a.w < 0) throw std::domain_error("DiscreteMeasure: negative weight at " + to_string(a.x));
    if (a.w == 0) continue;
    merged[a.x] += a.w;
  }
  atoms_.reserve(merged.size());
  for (auto& [x, w] : merged)
    if (w != 0) atoms_.push_back({x, w});
}

Rational DiscreteMeasure::mass() const {
  Rational m = 0;
  for (auto& a : atoms_) m += a.w;
  return m;
}

Rational DiscreteMeasure::mean() const {
  Rational m = 0;
  for (auto& a : atoms_) m += a.w * a.x;
  return m;
}

Extended DiscreteMeasure::support_min() const {
  return is_zero() ? Extended::pos_inf() : Extended(atoms_.front().x);
}

Extended DiscreteMeasure::support_max() const {
  return is_zero() ? Extended::neg_inf() : Extended(atoms_.back().x);
}

Rational DiscreteMeasure::weight_at(const Rational& x) const {
  for (auto& a : atoms_)
    if (a.x == x) return a.w;
  return 0;
}

Rational DiscreteMeasure::mass_leq(const Rational& k) const {
  Rational m = 0;
  for (auto& a : atoms_)
    if (a.x <= k) m += a.w;
  return m;
}

Rational DiscreteMeasure::mass_below(const Rational& k) const {
  Rational m = 0;
  for (auto& a : atoms_)
    if (a.x < k) m += a.w;
  return m;
}

Rational DiscreteMeasure::quantile_left(const Rational& u) const {
  if (u <= 0 || u > mass()) throw std::domain_error("quantile_left: level outside (0, mass]");
  Rational acc = 0;
  for (auto& a : atoms_) {
    acc += a.w;
    if (acc >= u) return a.x;  // first atom whose cumulative mass reaches u
  }
  return atoms_.back().x;  // unreachable given the guard
}

Rational DiscreteMeasure::quantile_right(const Rational& u) const {
  if (u < 0 || u >= mass()) throw std::domain_error("quantile_right: level outside [0, mass)");
  Rational acc = 0;
  for (auto& a : atoms_) {
    acc += a.w;
    if (acc > u) return a.x;  // first atom whose cumulative mass exceeds u
  }
  return atoms_.back().x;  // unreachable given the guard
}

DiscreteMeasure DiscreteMeasure::lower_part(const Rational& u) const {
  if (u < 0 || u > mass()) throw std::domain_error("lower_part: level outside [0, mass]");
  DiscreteMeasure out;
  Rational remaining = u;
  for (auto& a : atoms_) {
    if (remaining == 0) break;
    Rational take = std::min(a.w, remaining);
    out.atoms_.push_back({a.x, take});
    remaining -= take;
  }
  return out;
}

std::vector<DiscreteMeasure> DiscreteMeasure::refine(long parts) const {
  if (parts < 1) throw std::domain_error("refine: parts must be positive");
  std::vector<DiscreteMeasure> out;
  Rational m = mass();
  for (long j = 1; j <= parts; ++j)
    out.push_back(quantile_slice(m * Rational(j - 1, parts), m * Rational(j, parts)));
  return out;
}

DiscreteMeasure DiscreteMeasure::quantile_slice(const Rational& u_lo, const Rational& u_hi) const {
  if (u_lo > u_hi) throw std::domain_error("quantile_slice: u_lo > u_hi");
  return lower_part(u_hi) - lower_part(u_lo);
}

DiscreteMeasure DiscreteMeasure::restrict(const Extended& lo, bool include_lo,
                                          const Extended& hi, bool include_hi) const {
  DiscreteMeasure out;
  for (auto& a : atoms_) {
    Extended x(a.x);
    bool above = lo < x || (include_lo && lo == x);
    bool below = x < hi || (include_hi && x == hi);
    if (above && below) out.atoms_.push_back(a);
  }
  return out;
}

DiscreteMeasure DiscreteMeasure::scaled(const Rational& factor) const {
  if (factor < 0) throw std::invalid_argument("scaled: negative factor");
  DiscreteMeasure out;
  if (factor == 0) return out;
  for (auto& a : atoms_) out.atoms_.push_back({a.x, a.w * factor});
  return out;
}

DiscreteMeasure operator+(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  std::vector<Atom> all = a.atoms_;
  all.insert(all.end(), b.atoms_.begin(), b.atoms_.end());
  return DiscreteMeasure(std::move(all));
}

DiscreteMeasure operator-(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  std::map<Rational, Rational> merged;
  for (auto& at : a.atoms_) merged[at.x] += at.w;
  for (auto& at : b.atoms_) merged[at.x] -= at.w;
  DiscreteMeasure out;
  for (auto& [x, w] : merged) {
    if (w < 0) throw std::domain_error("DiscreteMeasure subtraction: negative mass at " + to_string(x));
    if (w > 0) out.atoms_.push_back({x, w});
  }
  return out;
}

std::string DiscreteMeasure::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < atoms_.size(); ++i) {
    if (i) os << " + ";
    os << to_string(atoms_[i].w) << "*d[" << to_string(atoms_[i].x) << "]";
  }
  return os.str();
}

}  // namespace smot
