#pragma once

#include "smot/rational.hpp"

#include <vector>

namespace smot {

// Minimize objective . x subject to eq_lhs x = eq_rhs, ub_lhs x <= ub_rhs,
// x >= 0.  All data exact rationals.
struct LpProblem {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> eq_lhs;
  std::vector<Rational> eq_rhs;
  std::vector<std::vector<Rational>> ub_lhs;
  std::vector<Rational> ub_rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;            // optimal objective when status == Optimal
  std::vector<Rational> x;   // a primal optimum when status == Optimal
};

// Dense two-phase primal simplex with Bland's rule (exact arithmetic rules
// out numerical trouble; Bland rules out cycling).
LpSolution lp_solve(const LpProblem& problem);

}  // namespace smot
