#include "smot/oracle.hpp"

#include "smot/order.hpp"

#include <set>
#include <stdexcept>

namespace smot {

LpSolution min_over_eta(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                        const std::vector<Rational>& f_at_nu_atoms) {
  const auto& ys = nu.atoms();
  const size_t n = ys.size();
  if (f_at_nu_atoms.size() != n) throw std::invalid_argument("min_over_eta: objective size mismatch");

  LpProblem p;
  p.objective = f_at_nu_atoms;

  // eta_j <= nu_j
  for (size_t j = 0; j < n; ++j) {
    std::vector<Rational> row(n, Rational(0));
    row[j] = 1;
    p.ub_lhs.push_back(std::move(row));
    p.ub_rhs.push_back(ys[j].w);
  }
  // equal mass
  p.eq_lhs.push_back(std::vector<Rational>(n, Rational(1)));
  p.eq_rhs.push_back(mu.mass());
  // put-potential domination P_eta(k) >= P_mu(k) on the merged atom grid;
  // the difference of potentials is piecewise linear with breakpoints there
  // and (under equal mass) constant tails, with the right tail constant
  // equal to mean(mu) - mean(eta), so the grid plus an explicit mean row
  // covers every k.
  std::set<Rational> grid;
  for (auto& a : mu.atoms()) grid.insert(a.x);
  for (auto& a : ys) grid.insert(a.x);
  for (const Rational& k : grid) {
    std::vector<Rational> row(n);
    for (size_t j = 0; j < n; ++j) row[j] = -pos(k - ys[j].x);
    Rational p_mu = 0;
    for (auto& a : mu.atoms()) p_mu += a.w * pos(k - a.x);
    p.ub_lhs.push_back(std::move(row));
    p.ub_rhs.push_back(-p_mu);
  }
  std::vector<Rational> mean_row(n);
  for (size_t j = 0; j < n; ++j) mean_row[j] = ys[j].x;
  p.ub_lhs.push_back(std::move(mean_row));
  p.ub_rhs.push_back(mu.mean());

  return lp_solve(p);
}

LpSolution min_over_couplings(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                              const std::vector<std::vector<Rational>>& cost,
                              TransportConstraint constraint) {
  const auto& xs = mu.atoms();
  const auto& ys = nu.atoms();
  const size_t m = xs.size(), n = ys.size();
  if (cost.size() != m) throw std::invalid_argument("min_over_couplings: cost rows mismatch");

  auto var = [n](size_t i, size_t j) { return i * n + j; };
  LpProblem p;
  p.objective.assign(m * n, Rational(0));
  for (size_t i = 0; i < m; ++i) {
    if (cost[i].size() != n) throw std::invalid_argument("min_over_couplings: cost cols mismatch");
    for (size_t j = 0; j < n; ++j) p.objective[var(i, j)] = cost[i][j];
  }

  for (size_t i = 0; i < m; ++i) {  // source marginal
    std::vector<Rational> row(m * n, Rational(0));
    for (size_t j = 0; j < n; ++j) row[var(i, j)] = 1;
    p.eq_lhs.push_back(std::move(row));
    p.eq_rhs.push_back(xs[i].w);
  }
  for (size_t j = 0; j < n; ++j) {  // target marginal
    std::vector<Rational> row(m * n, Rational(0));
    for (size_t i = 0; i < m; ++i) row[var(i, j)] = 1;
    p.eq_lhs.push_back(std::move(row));
    p.eq_rhs.push_back(ys[j].w);
  }
  for (size_t i = 0; i < m; ++i) {  // row barycenters
    std::vector<Rational> row(m * n, Rational(0));
    for (size_t j = 0; j < n; ++j) row[var(i, j)] = ys[j].x - xs[i].x;
    if (constraint == TransportConstraint::Martingale) {
      p.eq_lhs.push_back(std::move(row));
      p.eq_rhs.push_back(0);
    } else {
      p.ub_lhs.push_back(std::move(row));
      p.ub_rhs.push_back(0);
    }
  }
  return lp_solve(p);
}

namespace {

bool enumerate_eta(const DiscreteMeasure& mu, const std::vector<Atom>& nu_atoms,
                   long g, size_t j, std::vector<Atom>& chosen) {
  if (j == nu_atoms.size()) {
    DiscreteMeasure eta{std::vector<Atom>(chosen)};
    return eta.mass() == mu.mass() && compare(mu, eta, OrderKind::Cd).holds;
  }
  std::set<Rational> weights;
  weights.insert(nu_atoms[j].w);
  for (Rational w = 0; w < nu_atoms[j].w; w += Rational(1, g)) weights.insert(w);
  for (const Rational& w : weights) {
    chosen.push_back({nu_atoms[j].x, w});
    if (enumerate_eta(mu, nu_atoms, g, j + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool brute_force_pcd(const DiscreteMeasure& mu, const DiscreteMeasure& nu, long grid_denominator) {
  if (nu.size() > 4) throw std::invalid_argument("brute_force_pcd: instance too large");
  if (grid_denominator <= 0) throw std::invalid_argument("brute_force_pcd: bad lattice");
  std::vector<Atom> chosen;
  return enumerate_eta(mu, nu.atoms(), grid_denominator, 0, chosen);
}

std::vector<std::vector<Rational>> spence_mirrlees_cost(const DiscreteMeasure& mu,
                                                        const DiscreteMeasure& nu) {
  if (mu.is_zero() || nu.is_zero()) throw std::invalid_argument("spence_mirrlees_cost: empty marginal");
  // The rank multiplier is positive and strictly decreasing in x while
  // (shift - y)^2 is a strictly decreasing, strictly convex quadratic on the
  // support of nu, so c(x2,.) - c(x1,.) is strictly increasing and strictly
  // concave there; this is the cost class whose supermartingale minimizer is
  // the increasing coupling (antitone tail: supermodularity; martingale part:
  // concavity of the difference).
  Rational shift = nu.atoms().back().x + 1;
  std::vector<std::vector<Rational>> cost;
  for (size_t i = 0; i < mu.size(); ++i) {
    std::vector<Rational> row;
    for (auto& y : nu.atoms()) {
      Rational d = shift - y.x;
      row.push_back(Rational(mu.size() - i) * d * d);
    }
    cost.push_back(std::move(row));
  }
  return cost;
}

}  // namespace smot
