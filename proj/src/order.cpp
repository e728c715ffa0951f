#include "smot/order.hpp"

#include <set>

namespace smot {

namespace {

OrderResult ok() { return {true, ""}; }
OrderResult fail(std::string witness) { return {false, std::move(witness)}; }

OrderResult compare_pointwise(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  for (auto& at : a.atoms()) {
    Rational have = b.weight_at(at.x);
    if (have < at.w)
      return fail("atom at " + to_string(at.x) + ": weight " + to_string(at.w) +
                  " exceeds available " + to_string(have));
  }
  return ok();
}

// Equal mass plus put-potential domination, checked at the merged atom grid
// (both potentials are piecewise linear with breakpoints only there, and
// their difference is constant on both tails).
OrderResult compare_cd(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  if (a.mass() != b.mass())
    return fail("mass mismatch: " + to_string(a.mass()) + " vs " + to_string(b.mass()));
  PwlFunction gap = PwlFunction::put_potential(b) - PwlFunction::put_potential(a);
  for (auto& p : gap.points())
    if (p.y < 0)
      return fail("put potential gap " + to_string(p.y) + " < 0 at k = " + to_string(p.x));
  return ok();
}

OrderResult compare_c(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  if (auto r = compare_cd(a, b); !r) return r;
  if (a.mean() != b.mean())
    return fail("mean mismatch: " + to_string(a.mean()) + " vs " + to_string(b.mean()));
  return ok();
}

OrderResult compare_pcd(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  if (a.mass() > b.mass())
    return fail("mass " + to_string(a.mass()) + " exceeds " + to_string(b.mass()));
  // a is Cd-below some pointwise submeasure of b iff it is Cd-below the
  // Cd-largest one of matching mass.
  if (auto r = compare_cd(a, maximal_element(a, b)); !r)
    return fail("not below the maximal submeasure: " + r.witness);
  return ok();
}

OrderResult compare_pc(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  if (auto r = compare_pcd(a, b); !r) return r;
  // Given Pcd, the martingale refinement holds iff the call potentials are
  // ordered as well.
  Extended excess = PwlFunction::sup_difference(PwlFunction::call_potential(a),
                                               PwlFunction::call_potential(b));
  if (excess > Extended(Rational(0)))
    return fail("call potential excess sup(C_a - C_b) = " + excess.str() + " > 0");
  return ok();
}

}  // namespace

OrderResult compare(const DiscreteMeasure& a, const DiscreteMeasure& b, OrderKind kind) {
  switch (kind) {
    case OrderKind::Pointwise: return compare_pointwise(a, b);
    case OrderKind::Cd: return compare_cd(a, b);
    case OrderKind::C: return compare_c(a, b);
    case OrderKind::Pcd: return compare_pcd(a, b);
    case OrderKind::Pc: return compare_pc(a, b);
  }
  throw std::logic_error("compare: unknown order kind");
}

DiscreteMeasure maximal_element(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  if (mu.mass() > nu.mass())
    throw std::domain_error("maximal_element: first measure is heavier than the second");
  return nu.lower_part(mu.mass());
}

bool disjoint_support_pc(const DiscreteMeasure& eta, const DiscreteMeasure& chi) {
  if (eta.is_zero()) return false;
  Rational m = eta.mass();
  Rational left = chi.mass_leq(eta.support_min().finite());
  Rational right = chi.mass() - chi.mass_below(eta.support_max().finite());
  return m <= left && m <= right;
}

}  // namespace smot
