#include "smot/shadow.hpp"

#include "smot/pwl.hpp"

namespace smot {

ShadowResult shadow(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  if (auto r = compare(mu, nu, OrderKind::Pcd); !r)
    throw std::domain_error("shadow: mu is not Pcd-below nu (" + r.witness + ")");
  if (mu.is_zero()) return {DiscreteMeasure(), 0};

  PwlFunction p_nu = PwlFunction::put_potential(nu);
  PwlFunction spare = p_nu - PwlFunction::put_potential(mu);  // >= 0 under Pcd
  ShadowResult out;
  out.shadow = (p_nu - spare.convex_hull()).second_derivative_measure();
  out.excess = mu.mean() - out.shadow.mean();

  // Structural sanity, all exact: right mass, submeasure of nu, Cd-above mu,
  // nonnegative excess.
  if (out.shadow.mass() != mu.mass()) throw std::logic_error("shadow: mass leak");
  if (!compare(out.shadow, nu, OrderKind::Pointwise))
    throw std::logic_error("shadow: result escapes the target measure");
  if (!compare(mu, out.shadow, OrderKind::Cd))
    throw std::logic_error("shadow: result is not Cd-above the source");
  if (out.excess < 0) throw std::logic_error("shadow: negative excess");
  return out;
}

}  // namespace smot
