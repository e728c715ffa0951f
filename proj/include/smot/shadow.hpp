#pragma once

#include "smot/measure.hpp"
#include "smot/order.hpp"

namespace smot {

struct ShadowResult {
  DiscreteMeasure shadow;
  // Supermartingale excess c = mean(mu) - mean(shadow) >= 0; zero exactly
  // when the shadow is reachable by a martingale (equal-mean) transport.
  Rational excess;
};

// The shadow of mu in nu: the Cd-least pointwise submeasure eta of nu with
// mu <= Cd eta.  Computed through potentials,
//   P_shadow = P_nu - (P_nu - P_mu)^c   (largest convex minorant),
// which is exact for piecewise linear potentials.  Requires mu <= Pcd nu and
// throws (with the order witness) otherwise.
ShadowResult shadow(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

}  // namespace smot
