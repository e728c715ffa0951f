#include "smot/pwl.hpp"

#include "random_instances.hpp"

#include <doctest.h>

#include <random>

using namespace smot;

namespace {
DiscreteMeasure eg2_nu() {
  return DiscreteMeasure({{rat(-2), rat(1, 2)}, {rat(1), rat(1, 2)}});
}
}  // namespace

TEST_CASE("potentials evaluate the textbook examples") {
  PwlFunction p = PwlFunction::put_potential(eg2_nu());
  CHECK(p.eval(rat(-3)) == 0);
  CHECK(p.eval(rat(-2)) == 0);
  CHECK(p.eval(rat(0)) == 1);
  CHECK(p.eval(rat(1)) == rat(3, 2));
  CHECK(p.eval(rat(3)) == rat(7, 2));  // k - mean = 3 + 1/2
  CHECK(p.left_slope() == 0);
  CHECK(p.right_slope() == 1);
  CHECK(p.is_convex());

  PwlFunction c = PwlFunction::call_potential(eg2_nu());
  CHECK(c.eval(rat(2)) == 0);
  CHECK(c.eval(rat(0)) == rat(1, 2));
  CHECK(c.eval(rat(-3)) == rat(5, 2));
}

TEST_CASE("call minus put is the affine mean identity") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    auto [mu, nu] = testing::random_cd_pair(rng);
    for (const DiscreteMeasure& m : {mu, nu}) {
      PwlFunction diff = PwlFunction::call_potential(m) - PwlFunction::put_potential(m);
      CHECK(diff == PwlFunction::affine(-m.mass(), 0, m.mean()));
    }
  }
}

TEST_CASE("canonicalization removes non-kinks") {
  // Three collinear points collapse to a single anchor.
  PwlFunction f(rat(1), {{rat(0), rat(0)}, {rat(1), rat(1)}, {rat(2), rat(2)}}, rat(1));
  CHECK(f.points().size() == 1);
  CHECK(f == PwlFunction::affine(1, 0, 0));
}

TEST_CASE("one sided slopes") {
  PwlFunction p = PwlFunction::put_potential(eg2_nu());
  CHECK(p.slope_left_at(rat(-2)) == 0);
  CHECK(p.slope_right_at(rat(-2)) == rat(1, 2));
  CHECK(p.slope_left_at(rat(0)) == rat(1, 2));
  CHECK(p.min_subgradient(rat(1)) == rat(1, 2));
  CHECK(p.min_subgradient(rat(2)) == 1);
}

TEST_CASE("convex hull of the three quarter excess") {
  // P_nu - P_{mu_{3/4}} for mu = delta_0, nu as above: values 0, 1, 3/4 at
  // breakpoints -2, 0, 1; hull is the chord from (-2,0) with slope 1/4.
  DiscreteMeasure mu_u = DiscreteMeasure::point(rat(0), rat(3, 4));
  PwlFunction e = PwlFunction::put_potential(eg2_nu()) - PwlFunction::put_potential(mu_u);
  CHECK(e.eval(rat(0)) == 1);
  CHECK(e.eval(rat(1)) == rat(3, 4));
  PwlFunction hull = e.convex_hull();
  CHECK(hull.min_subgradient(rat(0)) == rat(1, 4));
  CHECK(hull.eval(rat(0)) == rat(1, 2));
  auto bracket = e.contact_bracket(rat(0));
  CHECK(bracket.first == Extended(rat(-2)));
  CHECK(bracket.second == Extended(rat(1)));
}

TEST_CASE("hull of a convex function is itself and is idempotent") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    PwlFunction f = testing::random_pwl(rng, true);
    CHECK(f.convex_hull() == f);
    PwlFunction g = testing::random_pwl(rng, false);
    PwlFunction h = g.convex_hull();
    CHECK(h.is_convex());
    CHECK(h.convex_hull() == h);
  }
}

TEST_CASE("difference convexity lemma") {
  // f, g convex implies g - (g - f)^c convex.
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    PwlFunction f = testing::random_pwl(rng, true);
    PwlFunction g = testing::random_pwl(rng, true);
    PwlFunction d = g - f;
    if (d.left_slope() > d.right_slope()) continue;  // hull would be -inf
    CHECK((g - d.convex_hull()).is_convex());
  }
}

TEST_CASE("hull of a difference with a convex subtrahend") {
  // (f - g)^c = (f^c - g)^c for convex g.
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    PwlFunction f = testing::random_pwl(rng, false);
    PwlFunction g = testing::random_pwl(rng, true);
    PwlFunction d = f - g;
    if (d.left_slope() > d.right_slope()) continue;
    CHECK(d.convex_hull() == (f.convex_hull() - g).convex_hull());
  }
}

TEST_CASE("second derivative recovers the measure") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    auto [mu, nu] = testing::random_cd_pair(rng);
    CHECK(PwlFunction::put_potential(mu).second_derivative_measure() == mu);
    CHECK(PwlFunction::put_potential(nu).second_derivative_measure() == nu);
  }
}

TEST_CASE("sup values and sup differences") {
  PwlFunction down(rat(-1), {{rat(0), rat(2)}}, rat(0));
  CHECK(down.sup_value().is_pos_inf());
  PwlFunction peak(rat(1), {{rat(0), rat(2)}}, rat(-1));
  CHECK(peak.sup_value() == Extended(rat(2)));
  CHECK(PwlFunction::sup_difference(peak, PwlFunction::zero()) == Extended(rat(2)));
}

TEST_CASE("asymptotic class and intercept of a potential-difference hull") {
  // For put potentials f <= g the hull (g - f)^c again has zero left tail,
  // right slope mass(g) - mass(f) and right intercept shifted by
  // eta = sup(h - (g - f)) with h the asymptotic affine gap.
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    auto [mu, nu] = testing::random_pcd_pair(rng);
    PwlFunction f = PwlFunction::put_potential(mu);
    PwlFunction g = PwlFunction::put_potential(nu);
    PwlFunction hull = (g - f).convex_hull();
    CHECK(hull.left_slope() == 0);
    CHECK(hull.points().front().y == 0);
    CHECK(hull.right_slope() == nu.mass() - mu.mass());
    PwlFunction h = PwlFunction::affine(nu.mass() - mu.mass(), 0, -(nu.mean() - mu.mean()));
    Extended eta = PwlFunction::sup_difference(h, g - f);
    REQUIRE(!eta.is_pos_inf());
    CHECK(eta.finite() >= 0);
    const auto& last = hull.points().back();
    CHECK(last.y + hull.right_slope() * (rat(100) - last.x) ==
          h.eval(rat(100)) - eta.finite());
  }
}
