#include "smot/measure.hpp"

#include "random_instances.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace smot;

namespace {
DiscreteMeasure m_eg2_nu() {
  return DiscreteMeasure({{rat(-2), rat(1, 2)}, {rat(1), rat(1, 2)}});
}
}  // namespace

TEST_CASE("construction merges, sorts and drops zero weights") {
  DiscreteMeasure m({{rat(1), rat(1, 4)}, {rat(-1), rat(1, 2)}, {rat(1), rat(1, 4)},
                     {rat(3), rat(0)}});
  CHECK(m.size() == 2);
  CHECK(m.atoms()[0].x == rat(-1));
  CHECK(m.atoms()[1].w == rat(1, 2));
  CHECK_THROWS_AS(DiscreteMeasure({{rat(0), rat(-1)}}), std::domain_error);
}

TEST_CASE("zero measure is first class") {
  DiscreteMeasure z;
  CHECK(z.is_zero());
  CHECK(z.mass() == 0);
  CHECK(z.mean() == 0);
  CHECK(z.support_min().is_pos_inf());
  CHECK(z.support_max().is_neg_inf());
}

TEST_CASE("mass, mean and cdf evaluations") {
  DiscreteMeasure nu = m_eg2_nu();
  CHECK(nu.mass() == 1);
  CHECK(nu.mean() == rat(-1, 2));
  CHECK(nu.mass_leq(rat(-2)) == rat(1, 2));
  CHECK(nu.mass_below(rat(-2)) == 0);
  CHECK(nu.mass_leq(rat(0)) == rat(1, 2));
  CHECK(nu.mass_leq(rat(1)) == 1);
  CHECK(nu.weight_at(rat(1)) == rat(1, 2));
  CHECK(nu.weight_at(rat(0)) == 0);
}

TEST_CASE("quantiles at and between jumps") {
  DiscreteMeasure nu = m_eg2_nu();
  CHECK(nu.quantile_left(rat(1, 4)) == rat(-2));
  CHECK(nu.quantile_left(rat(1, 2)) == rat(-2));  // sup{k : F(k) < u}
  CHECK(nu.quantile_right(rat(1, 2)) == rat(1));
  CHECK(nu.quantile_left(rat(3, 4)) == rat(1));
}

TEST_CASE("lower part splits an atom exactly") {
  DiscreteMeasure nu = m_eg2_nu();
  DiscreteMeasure low = nu.lower_part(rat(3, 4));
  CHECK(low.mass() == rat(3, 4));
  CHECK(low.weight_at(rat(-2)) == rat(1, 2));
  CHECK(low.weight_at(rat(1)) == rat(1, 4));
  CHECK(nu.lower_part(rat(0)).is_zero());
  CHECK(nu.lower_part(rat(1)) == nu);
}

TEST_CASE("refine produces equal-mass increments that sum back") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    auto [mu, nu] = testing::random_cd_pair(rng);
    auto parts = mu.refine(5);
    REQUIRE(parts.size() == 5);
    DiscreteMeasure sum;
    for (const auto& p : parts) {
      CHECK(p.mass() == mu.mass() / 5);
      sum = sum + p;
    }
    CHECK(sum == mu);
  }
}

TEST_CASE("restriction endpoints honor open and closed flags") {
  DiscreteMeasure nu = m_eg2_nu();
  CHECK(nu.restrict(Extended(rat(-2)), true, Extended(rat(1)), false) ==
        DiscreteMeasure::point(rat(-2), rat(1, 2)));
  CHECK(nu.restrict(Extended(rat(-2)), false, Extended::pos_inf(), false) ==
        DiscreteMeasure::point(rat(1), rat(1, 2)));
  CHECK(nu.restrict(Extended::neg_inf(), false, Extended::pos_inf(), false) == nu);
}

TEST_CASE("arithmetic respects the pointwise order") {
  DiscreteMeasure nu = m_eg2_nu();
  DiscreteMeasure half = nu.scaled(rat(1, 2));
  CHECK(half.mass() == rat(1, 2));
  CHECK(nu - half == half);
  CHECK(half + half == nu);
  CHECK_THROWS_AS(half - nu, std::domain_error);
}

TEST_CASE("quantile slices reassemble the measure") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    auto [mu, nu] = testing::random_cd_pair(rng);
    DiscreteMeasure mid = nu.quantile_slice(rat(1, 3), rat(2, 3));
    CHECK(mid.mass() == rat(1, 3));
    CHECK(nu.lower_part(rat(1, 3)) + mid == nu.lower_part(rat(2, 3)));
  }
}
