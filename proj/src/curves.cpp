#include "smot/curves.hpp"

#include "smot/pwl.hpp"
#include "smot/shadow.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace smot {

namespace {

// Leftmost zero of a nonnegative piecewise-linear function on (-inf, y].
// Zeros of a canonical nonnegative PWL function occur at breakpoints (flat
// zero segments still have breakpoint endpoints), so scanning breakpoints
// suffices.  A zero flat left tail would mean the zero set is unbounded
// below, which the finite-support setting rules out.
Rational leftmost_zero_upto(const PwlFunction& f, const Rational& y) {
  if (f.left_slope() == 0 && !f.points().empty() && f.points().front().y == 0 &&
      f.points().front().x <= y) {
    throw std::logic_error("leftmost zero unbounded below");
  }
  for (const auto& p : f.points()) {
    if (p.x > y) break;
    if (p.y == 0) return p.x;
  }
  if (f.eval(y) == 0) return y;
  throw std::logic_error("no zero at or below the requested point");
}

}  // namespace

CurveContext::CurveContext(DiscreteMeasure mu, DiscreteMeasure nu)
    : mu_(std::move(mu)), nu_(std::move(nu)) {
  if (mu_.mass() != 1 || nu_.mass() != 1) {
    throw std::domain_error("curve evaluation needs probability measures");
  }
  u_star_ = ustar(mu_, nu_);
  mu_hat_ = mu_.lower_part(u_star_);
  if (u_star_ == 0) {
    nu_hat_ = DiscreteMeasure();
    nu_tilde_ = nu_;
    return;
  }
  nu_hat_ = shadow(mu_hat_, nu_).shadow;
  nu_tilde_ = nu_ - nu_hat_;
  IrreducibleDecomposition dec = decompose(mu_hat_, nu_hat_);
  for (const auto& comp : dec.components) {
    if (!comp.martingale) {
      // c(u*) = 0 forces equal means of the lifted pair, so the
      // decomposition has bounded components only.
      throw std::logic_error("unexpected unbounded component below the regime level");
    }
    Window w;
    w.lo = comp.lo.finite();
    w.hi = comp.hi.finite();
    w.u_lo = mu_hat_.mass_leq(w.lo);
    w.u_hi = w.u_lo + comp.mu_part.mass();
    w.mu_part = comp.mu_part;
    w.nu_part = comp.nu_part;
    windows_.push_back(std::move(w));
  }
}

const CurveContext::Window* CurveContext::window_of(const Rational& u) const {
  for (const auto& w : windows_) {
    if (w.u_lo < u && u < w.u_hi) return &w;
  }
  return nullptr;
}

SupportTriple CurveContext::triple_at(const Rational& u) const {
  if (!(0 < u && u < 1)) throw std::domain_error("quantile level must lie in (0,1)");
  SupportTriple t;
  t.u = u;
  t.G = mu_.quantile_left(u);

  if (u > u_star_) {
    t.region = Region::Supermartingale;
    // The decreasing map: left quantile of the reservoir at level 1-u.
    t.T = nu_tilde_.quantile_left(1 - u);
    return t;
  }

  t.region = Region::Martingale;
  // Slope of the excess hull for the original pair at G; reported alongside
  // R and S (the window computation below uses the window-local slope, which
  // differs from this one by the reservoir mass left of G).
  PwlFunction excess = PwlFunction::put_potential(nu_) -
                       PwlFunction::put_potential(mu_.lower_part(u));
  t.phi = excess.convex_hull().min_subgradient(t.G);

  if (const Window* w = window_of(u)) {
    // Strictly inside a window: two-point kernel on {R, S} with mean G.
    Rational weight = u - w->u_lo;
    PwlFunction ew = PwlFunction::put_potential(w->nu_part) -
                     PwlFunction::put_potential(w->mu_part.lower_part(weight));
    PwlFunction hull = ew.convex_hull();
    auto bracket = ew.contact_bracket(t.G);
    if (bracket.second.is_pos_inf()) {
      throw std::logic_error("no hull contact to the right of G inside a window");
    }
    t.S = bracket.second.finite();
    Rational slope = hull.min_subgradient(t.G);
    PwlFunction diff = PwlFunction::put_potential(w->nu_part) -
                       PwlFunction::put_potential(w->mu_part) -
                       PwlFunction::affine(slope, t.G, hull.eval(t.G));
    t.R = leftmost_zero_upto(diff, t.G);
    return t;
  }

  // Window boundary u = u_hi with the quantile still short of the right end:
  // the kernel closes the whole window.
  for (const auto& w : windows_) {
    if (u == w.u_hi && t.G < w.hi) {
      t.R = w.lo;
      t.S = w.hi;
      return t;
    }
  }

  // Outside every window the transport is the identity.
  t.R = t.G;
  t.S = t.G;
  return t;
}

Rational CurveContext::sample_y(const Rational& u, const Rational& v) const {
  if (!(0 < v && v < 1)) throw std::domain_error("second coordinate must lie in (0,1)");
  SupportTriple t = triple_at(u);
  if (t.region == Region::Supermartingale) return *t.T;
  if (*t.R == *t.S) return t.G;
  // Two-point law on {R, S} with mean G: P(R) = (S - G) / (S - R).
  if (v <= (*t.S - t.G) / (*t.S - *t.R)) return *t.R;
  return *t.S;
}

bool CurveContext::kernel_limit_check(const Rational& u, int depth) const {
  SupportTriple t = triple_at(u);
  DiscreteMeasure nu_rem = nu_ - shadow(mu_.lower_part(u), nu_).shadow;

  Extended lo = Extended::neg_inf();
  Extended hi = Extended::pos_inf();
  Rational center;
  Rational ref;

  if (t.region == Region::Martingale) {
    const Window* w = window_of(u);
    // Collapsed kernels and window boundaries carry no mass; nothing to probe.
    if (w == nullptr || *t.R == *t.S) return true;
    lo = Extended(*t.R);
    hi = Extended(*t.S);
    center = t.G;
    ref = w->u_hi - u;
    // Shrink the probe so the balanced shadow can sit on the endpoint atoms:
    // a two-point law on {R, S} with mean G puts (S-G)/(S-R) of its mass at R.
    Rational wR = nu_rem.weight_at(*t.R);
    Rational wS = nu_rem.weight_at(*t.S);
    Rational span = *t.S - *t.R;
    if (t.G < *t.S) {
      if (wR == 0) return false;
      ref = std::min(ref, Rational(wR * span / (*t.S - t.G)));
    }
    if (*t.R < t.G) {
      if (wS == 0) return false;
      ref = std::min(ref, Rational(wS * span / (t.G - *t.R)));
    }
  } else {
    // Above the regime level the remaining target is the lower part of the
    // reservoir; its top atom sits at T and the probe shadows collapse there.
    center = t.G;
    hi = Extended(*t.T);
    lo = hi;  // probe shadows must collapse onto T itself
    ref = nu_rem.weight_at(*t.T);
    if (ref == 0) return false;
  }

  Extended prev_lo = Extended::neg_inf();
  Extended prev_hi = Extended::pos_inf();
  Rational eps = ref;
  for (int j = 1; j <= depth; ++j) {
    eps /= 2;
    DiscreteMeasure sh = shadow(DiscreteMeasure::point(center, eps), nu_rem).shadow;
    Extended smin = sh.support_min();
    Extended smax = sh.support_max();
    if (smin < lo || hi < smax) return false;
    if (j > 1 && (smin < prev_lo || prev_hi < smax)) return false;  // nesting
    prev_lo = smin;
    prev_hi = smax;
  }
  return true;
}

SupportTriple triple_at(const DiscreteMeasure& mu, const DiscreteMeasure& nu, const Rational& u) {
  return CurveContext(mu, nu).triple_at(u);
}

Rational sample_y(const DiscreteMeasure& mu, const DiscreteMeasure& nu, const Rational& u,
                  const Rational& v) {
  return CurveContext(mu, nu).sample_y(u, v);
}

bool kernel_limit_check(const DiscreteMeasure& mu, const DiscreteMeasure& nu, const Rational& u,
                        int depth) {
  return CurveContext(mu, nu).kernel_limit_check(u, depth);
}

}  // namespace smot
