#pragma once

// Grid checks for the supporting functions, shared between the unit tests
// and the acceptance harness.  Each check returns an empty string on
// success and a short description of the first violation otherwise.

#include "smot/curves.hpp"
#include "smot/pwl.hpp"
#include "smot/shadow.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace smot::testing {

// Interior grid {j/(n+1)} plus the quantile windows' endpoints (which cover
// the null set of window-closing levels) and u* itself when interior.
inline std::vector<Rational> curve_grid(const CurveContext& ctx, int n) {
  std::vector<Rational> us;
  for (int j = 1; j <= n; ++j) us.push_back(Rational(j) / (n + 1));
  for (const auto& w : ctx.windows()) {
    if (0 < w.u_lo) us.push_back(w.u_lo);
    if (w.u_hi < 1) us.push_back(w.u_hi);
  }
  if (0 < ctx.u_star() && ctx.u_star() < 1) us.push_back(ctx.u_star());
  std::sort(us.begin(), us.end());
  us.erase(std::unique(us.begin(), us.end()), us.end());
  return us;
}

inline std::string check_triple_invariants(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                                           const CurveContext& ctx, int grid_n) {
  std::ostringstream bad;
  std::vector<Rational> us = curve_grid(ctx, grid_n);
  std::vector<SupportTriple> ts;
  for (const Rational& u : us) ts.push_back(ctx.triple_at(u));

  for (const SupportTriple& t : ts) {
    if (t.region == Region::Martingale) {
      if (!t.R || !t.S || !t.phi) return "martingale point missing R/S/phi at u=" + to_string(t.u);
      if (!(*t.R <= t.G && t.G <= *t.S)) return "R <= G <= S fails at u=" + to_string(t.u);
      if (*t.phi < 0) return "phi < 0 at u=" + to_string(t.u);
      // Bounds: inside or on the boundary of a window, R and S stay inside
      // the component interval.
      for (const auto& w : ctx.windows()) {
        if (w.u_lo < t.u && t.u <= w.u_hi) {
          if (*t.R < w.lo || w.hi < *t.S) return "component bounds fail at u=" + to_string(t.u);
        }
      }
    } else {
      if (!t.T) return "supermartingale point missing T at u=" + to_string(t.u);
      if (!(*t.T < t.G)) return "T < G fails at u=" + to_string(t.u);
    }
  }

  // Second-order left monotonicity of (R,S) and monotone T; cross rule
  // between the regions.
  for (size_t i = 0; i < ts.size(); ++i) {
    for (size_t j = i + 1; j < ts.size(); ++j) {
      const SupportTriple& a = ts[i];
      const SupportTriple& b = ts[j];
      if (a.region == Region::Martingale && b.region == Region::Martingale) {
        if (!(*a.S <= *b.S)) return "S not nondecreasing at u=" + to_string(a.u) + "," + to_string(b.u);
        if (*a.R < *b.R && *b.R < *a.S) {
          return "left monotonicity fails at u=" + to_string(a.u) + "," + to_string(b.u);
        }
      } else if (a.region == Region::Martingale && b.region == Region::Supermartingale) {
        if (*a.R < *b.T && *b.T < *a.S) {
          return "cross monotonicity fails at u=" + to_string(a.u) + "," + to_string(b.u);
        }
      } else if (a.region == Region::Supermartingale && b.region == Region::Supermartingale) {
        if (!(*b.T <= *a.T)) return "T not nonincreasing at u=" + to_string(a.u);
      }
    }
  }

  // Hull geometry identities where the kernel is genuinely two-point.
  PwlFunction p_nu = PwlFunction::put_potential(nu);
  PwlFunction p_mu = PwlFunction::put_potential(mu);
  for (const SupportTriple& t : ts) {
    if (t.region != Region::Martingale || !(*t.R < t.G)) continue;
    PwlFunction excess = p_nu - PwlFunction::put_potential(mu.lower_part(t.u));
    PwlFunction hull = excess.convex_hull();
    auto line = [&](const Rational& k) { return hull.eval(t.G) + *t.phi * (k - t.G); };
    if ((p_nu - p_mu).eval(*t.R) != line(*t.R)) return "D(R) = L(R) fails at u=" + to_string(t.u);
    if (excess.eval(*t.S) != line(*t.S)) return "E(S) = L(S) fails at u=" + to_string(t.u);
  }
  return {};
}

}  // namespace smot::testing
