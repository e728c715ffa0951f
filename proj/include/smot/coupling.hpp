#pragma once

#include "smot/measure.hpp"
#include "smot/rational.hpp"

#include <string>
#include <vector>

namespace smot {

// A coupling of (mu, nu) stored by disintegration: one row per source atom
// with a normalized (mass 1) conditional law.
struct CouplingRow {
  Rational x;                  // source atom
  Rational w;                  // source weight
  DiscreteMeasure conditional; // mass 1
};

struct Coupling {
  std::vector<CouplingRow> rows;

  DiscreteMeasure first_marginal() const;
  DiscreteMeasure second_marginal() const;
  // pi(A x B) for intervals with extended endpoints, both open.
  Rational mass_of_box(const Extended& x_lo, const Extended& x_hi,
                       const Extended& y_lo, const Extended& y_hi) const;
};

struct Check {
  bool ok = true;
  std::string witness;
  explicit operator bool() const { return ok; }
};

struct VerificationReport {
  Check marginals;        // both marginals reproduced exactly
  Check supermartingale;  // mean(conditional_i) <= x_i for every row
  Check martingale_rows;  // fully-martingale rows (quantile interval inside (0, u*]) have mean = x
  Check no_crossing;      // no mass crosses any zero of D = P_nu - P_mu strictly inside the supports
  Check left_monotone;    // no x < x' with y- < y' < y+ across conditional supports
  Check right_monotone;   // no x1 < x2 with x1 > x* and y1 < y2 across conditional supports

  bool all_ok() const {
    return marginals.ok && supermartingale.ok && martingale_rows.ok && no_crossing.ok &&
           left_monotone.ok && right_monotone.ok;
  }
};

// The increasing supermartingale coupling: row i's conditional is the
// shadow of w_i delta_{x_i} in what remains of nu, processed left to right.
// Equivalently (and asserted): the second marginal of rows 1..i is the
// shadow of mu|(-inf, x_i] in nu.
Coupling increasing_coupling(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

// Decreasing / increasing quantile rearrangements of probability measures,
// split exactly at the merged quantile grid.
Coupling antitone_coupling(const DiscreteMeasure& mu, const DiscreteMeasure& nu);
Coupling quantile_coupling(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

// Runs all six checks independently and exactly; never throws on a bad
// coupling, it reports.
VerificationReport verify(const Coupling& pi, const DiscreteMeasure& mu,
                          const DiscreteMeasure& nu);

// Expected cost sum_i w_i sum_j conditional_i({y_j}) c(x_i, y_j) with the
// cost supplied as a table over (mu atom index, nu atom index).
Rational coupling_cost(const Coupling& pi, const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                       const std::vector<std::vector<Rational>>& cost);

}  // namespace smot
