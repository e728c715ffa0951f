#include "smot/coupling.hpp"

#include "smot/order.hpp"
#include "smot/pwl.hpp"
#include "smot/regime.hpp"
#include "smot/shadow.hpp"

#include <map>
#include <optional>
#include <set>

namespace smot {

DiscreteMeasure Coupling::first_marginal() const {
  std::vector<Atom> atoms;
  for (auto& r : rows) atoms.push_back({r.x, r.w});
  return DiscreteMeasure(std::move(atoms));
}

DiscreteMeasure Coupling::second_marginal() const {
  DiscreteMeasure out;
  for (auto& r : rows) out = out + r.conditional.scaled(r.w);
  return out;
}

Rational Coupling::mass_of_box(const Extended& x_lo, const Extended& x_hi,
                               const Extended& y_lo, const Extended& y_hi) const {
  Rational total = 0;
  for (auto& r : rows) {
    Extended x(r.x);
    if (!(x_lo < x && x < x_hi)) continue;
    total += r.w * r.conditional.restrict(y_lo, false, y_hi, false).mass();
  }
  return total;
}

Coupling increasing_coupling(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  if (auto r = compare(mu, nu, OrderKind::Cd); !r)
    throw std::domain_error("increasing_coupling: mu is not Cd-below nu (" + r.witness + ")");

  Coupling pi;
  DiscreteMeasure nu_rem = nu, prefix;
  for (auto& a : mu.atoms()) {
    DiscreteMeasure sh = shadow(DiscreteMeasure::point(a.x, a.w), nu_rem).shadow;
    pi.rows.push_back({a.x, a.w, sh.scaled(Rational(1) / a.w)});
    nu_rem = nu_rem - sh;
    prefix = prefix + sh;
    // Defining property, via shadow associativity: rows so far transport
    // mu|(-inf, x] onto its shadow in the full nu.
    DiscreteMeasure left_tail = mu.restrict(Extended::neg_inf(), false, Extended(a.x), true);
    if (prefix != shadow(left_tail, nu).shadow)
      throw std::logic_error("increasing_coupling: prefix marginal is not the prefix shadow");
  }
  return pi;
}

namespace {

Coupling rearrangement_coupling(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                                bool antitone) {
  if (mu.mass() != 1 || nu.mass() != 1)
    throw std::domain_error("rearrangement couplings need probability marginals");

  // Merged quantile grid: mu's cumulative masses plus nu's, the latter
  // mirrored for the antitone map.
  std::set<Rational> grid{Rational(0), Rational(1)};
  Rational acc = 0;
  for (auto& a : mu.atoms()) grid.insert(acc += a.w);
  acc = 0;
  for (auto& a : nu.atoms()) grid.insert(antitone ? 1 - (acc += a.w) : (acc += a.w));

  std::map<Rational, std::map<Rational, Rational>> rows;  // x -> y -> weight
  std::optional<Rational> prev;
  for (const Rational& b : grid) {
    if (prev && *prev < b) {
      const Rational &a = *prev;
      Rational x = mu.quantile_left(b);  // constant on the cell (a, b]
      Rational y = antitone ? nu.quantile_left(1 - a) : nu.quantile_left(b);
      rows[x][y] += b - a;
    }
    prev = b;
  }

  Coupling pi;
  for (auto& [x, targets] : rows) {
    Rational w = 0;
    std::vector<Atom> atoms;
    for (auto& [y, m] : targets) {
      w += m;
      atoms.push_back({y, m});
    }
    pi.rows.push_back({x, w, DiscreteMeasure(std::move(atoms)).scaled(Rational(1) / w)});
  }
  return pi;
}

}  // namespace

Coupling antitone_coupling(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  return rearrangement_coupling(mu, nu, true);
}

Coupling quantile_coupling(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  return rearrangement_coupling(mu, nu, false);
}

VerificationReport verify(const Coupling& pi, const DiscreteMeasure& mu,
                          const DiscreteMeasure& nu) {
  VerificationReport rep;

  if (pi.first_marginal() != mu)
    rep.marginals = {false, "first marginal != mu"};
  else if (pi.second_marginal() != nu)
    rep.marginals = {false, "second marginal != nu"};
  for (auto& r : pi.rows)
    if (rep.marginals.ok && r.conditional.mass() != 1)
      rep.marginals = {false, "conditional at " + to_string(r.x) + " has mass != 1"};

  for (auto& r : pi.rows) {
    if (r.conditional.mean() > r.x) {
      rep.supermartingale = {false, "row " + to_string(r.x) + ": conditional mean " +
                                        to_string(r.conditional.mean()) + " > " + to_string(r.x)};
      break;
    }
  }

  // The regime level exists for Cd-ordered probability marginals; the
  // threshold-based checks are vacuous otherwise.
  std::optional<Rational> u_star;
  if (mu.mass() == 1 && nu.mass() == 1 && compare(mu, nu, OrderKind::Cd)) u_star = ustar(mu, nu);

  if (u_star) {
    Rational cum = 0;
    for (auto& r : pi.rows) {
      cum += r.w;
      // Rows whose whole quantile interval sits at or below u* must be
      // exact martingale rows; the atom straddling u* is legitimately mixed.
      if (cum <= *u_star && r.conditional.mean() != r.x) {
        rep.martingale_rows = {false, "martingale row " + to_string(r.x) + " has mean " +
                                          to_string(r.conditional.mean())};
        break;
      }
    }
  } else {
    rep.martingale_rows.witness = "threshold undefined (marginals not a Cd probability pair)";
  }

  // Lemma-style barrier: at every zero x of D = P_nu - P_mu strictly
  // between mu's extreme atoms, no mass may cross x in either direction.
  if (!mu.is_zero()) {
    PwlFunction d = PwlFunction::put_potential(nu) - PwlFunction::put_potential(mu);
    const Rational lo = mu.support_min().finite(), hi = mu.support_max().finite();
    std::vector<Rational> candidates;
    const auto& pts = d.points();
    for (size_t i = 0; i < pts.size(); ++i) {
      if (pts[i].y == 0 && pts[i].x > lo && pts[i].x < hi) candidates.push_back(pts[i].x);
      if (i + 1 < pts.size() && pts[i].y == 0 && pts[i + 1].y == 0) {
        Rational mid = (pts[i].x + pts[i + 1].x) / 2;  // interior of a flat zero stretch
        if (mid > lo && mid < hi) candidates.push_back(mid);
      }
    }
    for (const Rational& x : candidates) {
      Rational crossing =
          pi.mass_of_box(Extended::neg_inf(), Extended(x), Extended(x), Extended::pos_inf()) +
          pi.mass_of_box(Extended(x), Extended::pos_inf(), Extended::neg_inf(), Extended(x));
      if (crossing != 0) {
        rep.no_crossing = {false, "mass " + to_string(crossing) + " crosses the D-zero at " +
                                      to_string(x)};
        break;
      }
    }
  }

  // Second-order left monotonicity: no source pair x < x' whose conditionals
  // interleave as y- < y' < y+.
  for (size_t i = 0; i < pi.rows.size() && rep.left_monotone.ok; ++i)
    for (size_t j = i + 1; j < pi.rows.size() && rep.left_monotone.ok; ++j) {
      const auto& low = pi.rows[i].conditional;
      if (low.size() < 2) continue;
      for (auto& yp : pi.rows[j].conditional.atoms())
        if (low.support_min() < Extended(yp.x) && Extended(yp.x) < low.support_max()) {
          rep.left_monotone = {false, "rows " + to_string(pi.rows[i].x) + " < " +
                                          to_string(pi.rows[j].x) + " interleave at y' = " +
                                          to_string(yp.x)};
          break;
        }
    }

  // First-order right monotonicity above the martingale interval: for
  // x1 < x2 with x1 > x*, no target pair y1 < y2.
  if (u_star) {
    Extended x_star = martingale_threshold(mu, nu);
    for (size_t i = 0; i < pi.rows.size() && rep.right_monotone.ok; ++i) {
      if (Extended(pi.rows[i].x) <= x_star) continue;
      for (size_t j = i + 1; j < pi.rows.size() && rep.right_monotone.ok; ++j)
        if (pi.rows[i].conditional.support_min() < pi.rows[j].conditional.support_max())
          rep.right_monotone = {false, "rows " + to_string(pi.rows[i].x) + " < " +
                                           to_string(pi.rows[j].x) + " move mass upward"};
    }
  } else {
    rep.right_monotone.witness = "threshold undefined (marginals not a Cd probability pair)";
  }

  return rep;
}

Rational coupling_cost(const Coupling& pi, const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                       const std::vector<std::vector<Rational>>& cost) {
  if (cost.size() != mu.size()) throw std::invalid_argument("coupling_cost: table rows mismatch");
  auto nu_index = [&nu](const Rational& y) {
    for (size_t j = 0; j < nu.size(); ++j)
      if (nu.atoms()[j].x == y) return j;
    throw std::invalid_argument("coupling_cost: no table entry for target " + to_string(y));
  };
  Rational total = 0;
  for (auto& r : pi.rows) {
    size_t i = 0;
    while (i < mu.size() && mu.atoms()[i].x != r.x) ++i;
    if (i == mu.size()) throw std::invalid_argument("coupling_cost: row source not in mu");
    if (cost[i].size() != nu.size()) throw std::invalid_argument("coupling_cost: table cols mismatch");
    for (auto& t : r.conditional.atoms()) total += r.w * t.w * cost[i][nu_index(t.x)];
  }
  return total;
}

}  // namespace smot
