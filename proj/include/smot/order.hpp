#pragma once

#include "smot/measure.hpp"
#include "smot/pwl.hpp"

#include <string>

namespace smot {

// The stochastic-order zoo on finite measures:
//   Pointwise  a(B) <= b(B) for every set B (atom-wise domination)
//   Cd         equal mass and P_a <= P_b everywhere (a precedes b in the
//              "convex-decreasing" sense: supermartingale transport exists)
//   C          Cd plus equal means (martingale transport exists)
//   Pcd        a is Cd-below some Pointwise-submeasure of b
//   Pc         a is C-below some Pointwise-submeasure of b
enum class OrderKind { Pointwise, Cd, C, Pcd, Pc };

struct OrderResult {
  bool holds = false;
  std::string witness;  // human-readable violation certificate when !holds

  explicit operator bool() const { return holds; }
};

OrderResult compare(const DiscreteMeasure& a, const DiscreteMeasure& b, OrderKind kind);

// The Cd-largest submeasure of nu with the mass of mu: the lowest
// mass(mu) units of nu,
//   T(mu, nu) = nu|_(-inf, q) + (mass(mu) - nu((-inf, q))) delta_q,
//   q = G_nu^-(mass(mu)).
// a <= Pcd b holds iff a <= Cd maximal_element(a, b); requires
// mass(mu) <= mass(nu).
DiscreteMeasure maximal_element(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

// Sufficient separated-support criterion for eta <= Pc chi: eta has positive
// mass and chi carries at least mass(eta) both in (-inf, min supp eta] and in
// [max supp eta, +inf).
bool disjoint_support_pc(const DiscreteMeasure& eta, const DiscreteMeasure& chi);

}  // namespace smot
