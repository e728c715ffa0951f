#pragma once

#include "smot/measure.hpp"
#include "smot/rational.hpp"
#include "smot/regime.hpp"

#include <optional>
#include <vector>

namespace smot {

enum class Region { Martingale, Supermartingale };

// Pointwise evaluation of the supporting functions at a quantile level u:
// in the martingale regime (u <= u*) the conditional kernel is the two-point
// law on {R, S} with mean G; above u* it is the point mass at T.
struct SupportTriple {
  Rational u;
  Region region = Region::Martingale;
  Rational G;
  std::optional<Rational> R;
  std::optional<Rational> S;
  std::optional<Rational> T;
  std::optional<Rational> phi;
};

// Shared read-only state for curve evaluation over one Cd-ordered
// probability pair: the regime level, the lifted pair (mu_{u*}, its shadow),
// that pair's irreducible decomposition with quantile windows, and the
// leftover target mass driving the decreasing map T.
class CurveContext {
 public:
  struct Window {
    Rational lo;    // component interval (lo, hi)
    Rational hi;
    Rational u_lo;  // quantile window (u_lo, u_hi)
    Rational u_hi;
    DiscreteMeasure mu_part;
    DiscreteMeasure nu_part;
  };

  CurveContext(DiscreteMeasure mu, DiscreteMeasure nu);

  const Rational& u_star() const { return u_star_; }
  const DiscreteMeasure& nu_tilde() const { return nu_tilde_; }
  const std::vector<Window>& windows() const { return windows_; }

  SupportTriple triple_at(const Rational& u) const;
  Rational sample_y(const Rational& u, const Rational& v) const;
  bool kernel_limit_check(const Rational& u, int depth) const;

 private:
  const Window* window_of(const Rational& u) const;  // u strictly inside the quantile window

  DiscreteMeasure mu_;
  DiscreteMeasure nu_;
  Rational u_star_;
  DiscreteMeasure mu_hat_;    // lift(mu, u*)
  DiscreteMeasure nu_hat_;    // shadow(mu_hat, nu)
  DiscreteMeasure nu_tilde_;  // nu - nu_hat, the decreasing-map reservoir
  std::vector<Window> windows_;
};

// One-shot wrappers matching the context methods.
SupportTriple triple_at(const DiscreteMeasure& mu, const DiscreteMeasure& nu, const Rational& u);
Rational sample_y(const DiscreteMeasure& mu, const DiscreteMeasure& nu, const Rational& u,
                  const Rational& v);
bool kernel_limit_check(const DiscreteMeasure& mu, const DiscreteMeasure& nu, const Rational& u,
                        int depth);

}  // namespace smot
