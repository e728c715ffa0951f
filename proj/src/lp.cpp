#include "smot/lp.hpp"

#include <stdexcept>

namespace smot {

namespace {

// Tableau of equalities Ax = b with b >= 0 maintained under pivoting.
struct Tableau {
  std::vector<std::vector<Rational>> a;  // m x n
  std::vector<Rational> b;               // m
  std::vector<size_t> basis;             // m, column index basic in each row

  size_t rows() const { return a.size(); }
  size_t cols() const { return a.empty() ? 0 : a[0].size(); }

  void pivot(size_t pr, size_t pc) {
    Rational piv = a[pr][pc];
    for (auto& v : a[pr]) v /= piv;
    b[pr] /= piv;
    for (size_t r = 0; r < rows(); ++r) {
      if (r == pr || a[r][pc] == 0) continue;
      Rational f = a[r][pc];
      for (size_t c = 0; c < cols(); ++c) a[r][c] -= f * a[pr][c];
      b[r] -= f * b[pr];
    }
    basis[pr] = pc;
  }

  // Minimize cost . x over the tableau with Bland's rule; columns with
  // allowed[c] == false may not enter.  Returns false iff unbounded.
  bool optimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    for (;;) {
      // Multipliers y = cost_B B^{-1} come out of the reduced costs
      // directly: rc_c = cost_c - sum_r cost_{basis_r} a[r][c].
      size_t enter = cols();
      for (size_t c = 0; c < cols(); ++c) {
        if (!allowed[c]) continue;
        bool is_basic = false;
        for (size_t r = 0; r < rows(); ++r)
          if (basis[r] == c) is_basic = true;
        if (is_basic) continue;
        Rational rc = cost[c];
        for (size_t r = 0; r < rows(); ++r)
          if (cost[basis[r]] != 0) rc -= cost[basis[r]] * a[r][c];
        if (rc < 0) {
          enter = c;  // Bland: smallest improving index
          break;
        }
      }
      if (enter == cols()) return true;  // optimal

      size_t leave = rows();
      Rational best_ratio = 0;
      for (size_t r = 0; r < rows(); ++r) {
        if (a[r][enter] <= 0) continue;
        Rational ratio = b[r] / a[r][enter];
        if (leave == rows() || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[leave])) {  // Bland tie-break
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave == rows()) return false;  // unbounded
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpSolution lp_solve(const LpProblem& problem) {
  const size_t n = problem.objective.size();
  const size_t m_eq = problem.eq_lhs.size(), m_ub = problem.ub_lhs.size();
  const size_t m = m_eq + m_ub;
  const size_t n_slack = m_ub;
  const size_t n_art = m;
  const size_t total = n + n_slack + n_art;

  Tableau t;
  t.a.assign(m, std::vector<Rational>(total, Rational(0)));
  t.b.assign(m, Rational(0));
  t.basis.assign(m, 0);

  for (size_t r = 0; r < m; ++r) {
    const auto& lhs = r < m_eq ? problem.eq_lhs[r] : problem.ub_lhs[r - m_eq];
    if (lhs.size() != n) throw std::invalid_argument("solve: row width mismatch");
    for (size_t c = 0; c < n; ++c) t.a[r][c] = lhs[c];
    if (r >= m_eq) t.a[r][n + (r - m_eq)] = 1;  // slack
    t.b[r] = r < m_eq ? problem.eq_rhs[r] : problem.ub_rhs[r - m_eq];
    if (t.b[r] < 0) {  // keep rhs nonnegative for the ratio test
      for (auto& v : t.a[r]) v = -v;
      t.b[r] = -t.b[r];
    }
    t.a[r][n + n_slack + r] = 1;  // artificial, initial basis
    t.basis[r] = n + n_slack + r;
  }

  // Phase 1: drive the artificials to zero.
  std::vector<Rational> phase1_cost(total, Rational(0));
  std::vector<bool> allow_all(total, true);
  for (size_t r = 0; r < m; ++r) phase1_cost[n + n_slack + r] = 1;
  if (!t.optimize(phase1_cost, allow_all))
    throw std::logic_error("solve: phase 1 unbounded");  // impossible, cost >= 0
  Rational infeas = 0;
  for (size_t r = 0; r < m; ++r)
    if (t.basis[r] >= n + n_slack) infeas += t.b[r];
  if (infeas != 0) return {LpStatus::Infeasible, 0, {}};

  // Pivot leftover zero-valued artificials out of the basis; rows that
  // admit no pivot are redundant and get dropped.  This keeps phase 2 free
  // of artificial columns entirely.
  for (size_t r = t.rows(); r-- > 0;) {
    if (t.basis[r] < n + n_slack) continue;
    size_t c = 0;
    while (c < n + n_slack && t.a[r][c] == 0) ++c;
    if (c < n + n_slack) {
      t.pivot(r, c);
    } else {
      t.a.erase(t.a.begin() + r);
      t.b.erase(t.b.begin() + r);
      t.basis.erase(t.basis.begin() + r);
    }
  }

  // With no (remaining) constraints every variable can grow freely, so any
  // negative objective coefficient makes the problem unbounded; the tableau
  // loop below cannot see this because it has no columns to scan.
  if (t.rows() == 0) {
    for (size_t c = 0; c < n; ++c)
      if (problem.objective[c] < 0) return {LpStatus::Unbounded, 0, {}};
    return {LpStatus::Optimal, 0, std::vector<Rational>(n, Rational(0))};
  }

  // Phase 2 over the real objective; artificial columns may not enter.
  std::vector<Rational> cost(total, Rational(0));
  for (size_t c = 0; c < n; ++c) cost[c] = problem.objective[c];
  std::vector<bool> allowed(total, true);
  for (size_t c = n + n_slack; c < total; ++c) allowed[c] = false;
  if (!t.optimize(cost, allowed)) return {LpStatus::Unbounded, 0, {}};

  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.x.assign(n, Rational(0));
  for (size_t r = 0; r < t.rows(); ++r)
    if (t.basis[r] < n) sol.x[t.basis[r]] = t.b[r];
  sol.value = 0;
  for (size_t c = 0; c < n; ++c) sol.value += problem.objective[c] * sol.x[c];
  return sol;
}

}  // namespace smot
