#pragma once

#include "smot/measure.hpp"
#include "smot/rational.hpp"

#include <vector>

namespace smot {

// One interval of the irreducible decomposition of a Cd-ordered pair.  For
// the bounded (martingale) components both interval ends are finite zeros of
// D = P_nu - P_mu and mu_part, nu_part have equal mass and mean; the top
// (supermartingale) component is (x_star, +inf).
struct Component {
  Extended lo;
  Extended hi;
  bool martingale = true;
  DiscreteMeasure mu_part;
  DiscreteMeasure nu_part;
  // Boundary shares of nu's atoms at lo / hi assigned to this component.
  Rational alpha;
  Rational beta;
};

struct IrreducibleDecomposition {
  // sup of the zero set of D (+inf when D vanishes on the right tail, i.e.
  // equal means; finite otherwise for a Cd pair).
  Extended x_star = Extended::pos_inf();
  std::vector<Component> components;  // increasing; supermartingale one last if present
  DiscreteMeasure fixed_part;         // common leftover where mu and nu agree
};

// c(u) = max(0, sup_k (C_{mu_u}(k) - C_nu(k))) for probability marginals
// with mu Cd-below nu.
Rational c_of(const DiscreteMeasure& mu, const DiscreteMeasure& nu, const Rational& u);

// The regime-switching level u* = sup { u in (0,1) : c(u) = 0 } (sup of the
// empty set read as 0), computed exactly: on each atom's quantile interval
// c is a max of affine functions of u, so the last zero is a closed-form
// rational.
Rational ustar(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

IrreducibleDecomposition decompose(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

// Threshold x* of the martingale interval (-inf, x*]: G^-_mu(u*), with
// sentinels -inf at u* = 0 and +inf at u* = 1.
Extended martingale_threshold(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

}  // namespace smot
