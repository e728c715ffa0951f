#pragma once

#include "smot/rational.hpp"

#include <vector>

namespace smot {

struct Atom {
  Rational x;  // position
  Rational w;  // weight, strictly positive once stored

  friend bool operator==(const Atom&, const Atom&) = default;
};

// A finite nonnegative measure with finitely many atoms, kept sorted by
// position with strictly positive merged weights.  The zero measure is a
// first-class value (empty atom list).
class DiscreteMeasure {
 public:
  DiscreteMeasure() = default;
  // Sorts, merges duplicate positions, drops zero weights; throws on a
  // negative weight.
  explicit DiscreteMeasure(std::vector<Atom> atoms);

  static DiscreteMeasure point(const Rational& x, const Rational& w) {
    return DiscreteMeasure({{x, w}});
  }

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool is_zero() const { return atoms_.empty(); }
  size_t size() const { return atoms_.size(); }

  Rational mass() const;
  Rational mean() const;  // first moment, i.e. integral of x (zero measure -> 0)

  // Support bounds; -inf/+inf sentinels for the zero measure.
  Extended support_min() const;
  Extended support_max() const;

  Rational weight_at(const Rational& x) const;
  Rational mass_leq(const Rational& k) const;   // measure of (-inf, k]
  Rational mass_below(const Rational& k) const; // measure of (-inf, k)

  // Left and right quantile functions G^-(u), G^+(u) for 0 < u < mass.
  Rational quantile_left(const Rational& u) const;
  Rational quantile_right(const Rational& u) const;

  // Quantile lift: the restriction to the lowest u units of mass,
  //   mu_u = mu|_(-inf, G^-(u)) + (u - mu((-inf, G^-(u)))) delta_{G^-(u)}.
  // Defined for 0 <= u <= mass; u = 0 gives the zero measure.
  DiscreteMeasure lower_part(const Rational& u) const;

  // Quantile increments lower_part(j*mass/parts) - lower_part((j-1)*mass/parts),
  // j = 1..parts; they sum to the measure and each has mass mass/parts.
  std::vector<DiscreteMeasure> refine(long parts) const;

  // The slice between quantile levels u_lo <= u_hi (lower_part(u_hi) minus
  // lower_part(u_lo)); used to cut a measure along a common quantile grid.
  DiscreteMeasure quantile_slice(const Rational& u_lo, const Rational& u_hi) const;

  // Restriction to an interval with extended endpoints; each endpoint is
  // included iff the corresponding flag is set.
  DiscreteMeasure restrict(const Extended& lo, bool include_lo,
                           const Extended& hi, bool include_hi) const;

  DiscreteMeasure scaled(const Rational& factor) const;  // factor >= 0

  friend DiscreteMeasure operator+(const DiscreteMeasure& a, const DiscreteMeasure& b);
  // Throws if the difference has a negative atom anywhere.
  friend DiscreteMeasure operator-(const DiscreteMeasure& a, const DiscreteMeasure& b);
  friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;

  std::string str() const;

 private:
  std::vector<Atom> atoms_;
};

}  // namespace smot
