#include "smot/regime.hpp"

#include "smot/order.hpp"
#include "smot/pwl.hpp"

#include <set>

namespace smot {

namespace {

void require_cd(const DiscreteMeasure& mu, const DiscreteMeasure& nu, const char* who) {
  if (auto r = compare(mu, nu, OrderKind::Cd); !r)
    throw std::domain_error(std::string(who) + ": mu is not Cd-below nu (" + r.witness + ")");
}

}  // namespace

Rational c_of(const DiscreteMeasure& mu, const DiscreteMeasure& nu, const Rational& u) {
  require_cd(mu, nu, "c_of");
  if (u < 0 || u > 1) throw std::domain_error("c_of: u outside [0,1]");
  if (u == 0) return 0;
  Extended sup = PwlFunction::sup_difference(PwlFunction::call_potential(mu.lower_part(u)),
                                             PwlFunction::call_potential(nu));
  // Both tails of the difference are bounded (slopes 1-u and 0), so the sup
  // is finite.
  return pos(sup.finite());
}

Rational ustar(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  require_cd(mu, nu, "ustar");
  if (mu.mass() != 1) throw std::domain_error("ustar: probability marginals required");
  if (mu.mean() == nu.mean()) return 1;  // constant-mean supermartingales are martingales
  // Separated supports with no shared junction atom: any positive lower
  // slice of mu already needs mass strictly to its left, so c > 0 on (0,1).
  if (!nu.is_zero() && nu.support_max() < mu.support_min()) return 0;

  // Walk mu's atoms left to right.  With K the merged atom grid and
  // u in the quantile interval of atom x_i,
  //   C_{mu_u}(k) = C_{mu_{u_prev}}(k) + (u - u_prev) (x_i - k)^+,
  // so c(u) = max(0, max_j (A_j + B_j u)) on the interval and the last zero
  // of c is a closed-form rational.
  std::set<Rational> grid_set;
  for (auto& a : mu.atoms()) grid_set.insert(a.x);
  for (auto& a : nu.atoms()) grid_set.insert(a.x);
  std::vector<Rational> grid(grid_set.begin(), grid_set.end());

  std::vector<Rational> c_nu(grid.size()), c_lower(grid.size(), Rational(0));
  for (size_t j = 0; j < grid.size(); ++j) {
    Rational v = 0;
    for (auto& a : nu.atoms()) v += a.w * pos(a.x - grid[j]);
    c_nu[j] = v;
  }

  Rational u_prev = 0;
  for (auto& atom : mu.atoms()) {
    Rational u_hi = u_prev + atom.w;
    Rational best_zero = u_hi;
    bool binding = false;
    for (size_t j = 0; j < grid.size(); ++j) {
      Rational slope = pos(atom.x - grid[j]);
      Rational at_hi = c_lower[j] + (u_hi - u_prev) * slope - c_nu[j];
      if (at_hi <= 0) continue;
      // c(u_prev) = 0 held, so a constraint turning positive must have
      // positive slope; its zero lies inside [u_prev, u_hi].
      if (slope == 0) throw std::logic_error("ustar: constant constraint positive on a zero interval");
      Rational zero = u_prev + (c_nu[j] - c_lower[j]) / slope;
      binding = true;
      best_zero = std::min(best_zero, zero);
    }
    if (binding) return best_zero;  // c is nondecreasing: stays positive after
    for (size_t j = 0; j < grid.size(); ++j)
      c_lower[j] += atom.w * pos(atom.x - grid[j]);
    u_prev = u_hi;
  }
  return 1;
}

IrreducibleDecomposition decompose(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  require_cd(mu, nu, "decompose");
  IrreducibleDecomposition out;

  PwlFunction d = PwlFunction::put_potential(nu) - PwlFunction::put_potential(mu);
  const auto& pts = d.points();
  // Cd gives D >= 0 with flat tails: 0 on the left, mean(mu) - mean(nu) on
  // the right.  Zeros of a nonnegative piecewise-linear function sit at
  // breakpoints (or fill whole segments whose endpoints are breakpoints).
  for (auto& p : pts)
    if (p.y < 0) throw std::logic_error("decompose: negative potential gap");

  if (d == PwlFunction::zero() || (pts.size() == 1 && pts[0].y == 0 && d.left_slope() == 0 &&
                                   d.right_slope() == 0)) {
    out.x_star = Extended::pos_inf();
    out.fixed_part = mu;  // mu == nu
    if (mu != nu) throw std::logic_error("decompose: D vanishes but measures differ");
    return out;
  }

  const bool right_tail_zero = pts.back().y == 0;  // equal means
  if (right_tail_zero) {
    out.x_star = Extended::pos_inf();
  } else {
    // Largest zero breakpoint; one exists because the left tail vanishes.
    Extended xs = Extended::neg_inf();
    for (auto& p : pts)
      if (p.y == 0) xs = Extended(p.x);
    if (!xs.is_finite()) throw std::logic_error("decompose: no zero of D on the left tail");
    out.x_star = xs;
  }

  // Maximal open intervals of positivity between consecutive zero
  // breakpoints (interior breakpoints with D > 0 do not split them).
  std::vector<Rational> zeros;
  for (auto& p : pts)
    if (p.y == 0) zeros.push_back(p.x);
  std::vector<std::pair<Rational, Rational>> bounded;  // martingale intervals
  for (size_t z = 0; z + 1 < zeros.size(); ++z) {
    // D > 0 somewhere in (zeros[z], zeros[z+1]) iff some breakpoint inside
    // is positive or the interval is a single segment with positive... a
    // single segment between zero endpoints is identically zero, so the
    // interval is a component iff an interior breakpoint is positive.
    bool positive = false;
    for (auto& p : pts)
      if (p.x > zeros[z] && p.x < zeros[z + 1] && p.y > 0) positive = true;
    if (positive) bounded.push_back({zeros[z], zeros[z + 1]});
  }

  DiscreteMeasure used_mu, used_nu;
  for (auto& [lo, hi] : bounded) {
    Component comp;
    comp.lo = Extended(lo);
    comp.hi = Extended(hi);
    comp.martingale = true;
    comp.mu_part = mu.restrict(comp.lo, false, comp.hi, false);
    DiscreteMeasure nu_interior = nu.restrict(comp.lo, false, comp.hi, false);
    // The boundary atom shares are pinned by equal mass and equal mean
    // (Cd + D = 0 at both finite ends forces a martingale pair).
    Rational mass_def = comp.mu_part.mass() - nu_interior.mass();
    Rational mean_def = comp.mu_part.mean() - nu_interior.mean();
    comp.alpha = (hi * mass_def - mean_def) / (hi - lo);
    comp.beta = mass_def - comp.alpha;
    if (comp.alpha < 0 || comp.alpha > nu.weight_at(lo) || comp.beta < 0 ||
        comp.beta > nu.weight_at(hi))
      throw std::logic_error("decompose: boundary atom split out of range");
    comp.nu_part = nu_interior + DiscreteMeasure::point(lo, comp.alpha) +
                   DiscreteMeasure::point(hi, comp.beta);
    if (!compare(comp.mu_part, comp.nu_part, OrderKind::C))
      throw std::logic_error("decompose: martingale component is not convex-ordered");
    used_mu = used_mu + comp.mu_part;
    used_nu = used_nu + comp.nu_part;
    out.components.push_back(std::move(comp));
  }

  if (out.x_star.is_finite()) {
    Component top;
    top.lo = out.x_star;
    top.hi = Extended::pos_inf();
    top.martingale = false;
    top.mu_part = mu.restrict(top.lo, false, top.hi, false);
    DiscreteMeasure nu_interior = nu.restrict(top.lo, false, top.hi, false);
    top.alpha = top.mu_part.mass() - nu_interior.mass();
    top.beta = 0;
    if (top.alpha < 0 || top.alpha > nu.weight_at(out.x_star.finite()))
      throw std::logic_error("decompose: top boundary atom split out of range");
    top.nu_part = nu_interior + DiscreteMeasure::point(out.x_star.finite(), top.alpha);
    if (!compare(top.mu_part, top.nu_part, OrderKind::Cd))
      throw std::logic_error("decompose: top component is not Cd-ordered");
    used_mu = used_mu + top.mu_part;
    used_nu = used_nu + top.nu_part;
    out.components.push_back(std::move(top));
  }

  out.fixed_part = mu - used_mu;  // throws if a component overdrew
  if (out.fixed_part != nu - used_nu)
    throw std::logic_error("decompose: fixed parts of mu and nu disagree");
  return out;
}

Extended martingale_threshold(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  Rational u = ustar(mu, nu);
  if (u == 0) return Extended::neg_inf();
  if (u == 1) return Extended::pos_inf();
  return Extended(mu.quantile_left(u));
}

}  // namespace smot
