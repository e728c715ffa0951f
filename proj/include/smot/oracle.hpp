#pragma once

#include "smot/lp.hpp"
#include "smot/measure.hpp"
#include "smot/rational.hpp"

#include <optional>
#include <vector>

namespace smot {

// Independent certification oracles built on the exact LP solver.  These
// deliberately avoid the constructive code paths (potential hulls, greedy
// shadows) so that agreement between the two is meaningful evidence.

// Minimize integral of f d eta over all eta with eta <= nu pointwise and
// mu <= Cd eta.  f is given by its values at the atoms of nu (arbitrary
// otherwise, since feasible eta live on those atoms).  The feasible set is
// encoded as: 0 <= eta_j <= nu_j, equal mass, and put-potential domination
// on the merged atom grid (whose rightmost constraint is the mean
// inequality).
LpSolution min_over_eta(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                        const std::vector<Rational>& f_at_nu_atoms);

enum class TransportConstraint { Supermartingale, Martingale };

// Minimize sum_ij cost[i][j] p_ij over couplings p of (mu, nu) whose rows
// all satisfy conditional mean <= x_i (Supermartingale) or = x_i
// (Martingale).
LpSolution min_over_couplings(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                              const std::vector<std::vector<Rational>>& cost,
                              TransportConstraint constraint);

// Exhaustive decision of mu <= Pcd nu: enumerates every submeasure eta of nu
// whose weights lie on the 1/grid_denominator lattice (plus the full atom
// weight) and tests mu <= Cd eta.  Guarded to tiny instances.
bool brute_force_pcd(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                     long grid_denominator);

// A cost family under which the increasing supermartingale coupling is
// optimal: c(x_i, y) = g(i) * (Y + 1 - y)^2 with g the (1-based) rank of the
// source atom and Y the largest target atom.
std::vector<std::vector<Rational>> spence_mirrlees_cost(const DiscreteMeasure& mu,
                                                        const DiscreteMeasure& nu);

}  // namespace smot
