#include "smot/oracle.hpp"

#include "smot/coupling.hpp"
#include "smot/order.hpp"
#include "smot/shadow.hpp"
#include "random_instances.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace smot;

namespace {
DiscreteMeasure eg3_nu() {
  return DiscreteMeasure({{rat(-2), rat(1, 3)}, {rat(0), rat(1, 3)}, {rat(2), rat(1, 3)}});
}
DiscreteMeasure w_mu() {
  return DiscreteMeasure({{rat(-1), rat(1, 2)}, {rat(1), rat(1, 2)}});
}
DiscreteMeasure w_nu() {
  return DiscreteMeasure({{rat(-2), rat(1, 2)}, {rat(0), rat(1, 2)}});
}

std::vector<Rational> tabulate_put(const Rational& k, const DiscreteMeasure& nu) {
  std::vector<Rational> f;
  for (const auto& a : nu.atoms()) f.push_back(pos(k - a.x));
  return f;
}
}  // namespace

TEST_CASE("eta minimization on the nested textbook instance") {
  DiscreteMeasure xi = DiscreteMeasure::point(rat(0), rat(1, 3));
  LpSolution s = min_over_eta(xi, eg3_nu(), tabulate_put(rat(0), eg3_nu()));
  CHECK(s.status == LpStatus::Optimal);
  CHECK(s.value == 0);  // achieved by eta = xi itself
}

TEST_CASE("eta minimization trivial objectives") {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 10; ++t) {
    auto [mu, nu] = testing::random_pcd_pair(rng);
    // f = 1 integrates to the mass for every feasible eta.
    std::vector<Rational> ones(nu.size(), rat(1));
    LpSolution s = min_over_eta(mu, nu, ones);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.value == mu.mass());
    if (mu.mass() == nu.mass()) {
      // Equal mass: the only feasible eta is nu itself.
      std::vector<Rational> f = tabulate_put(rat(1), nu);
      LpSolution s2 = min_over_eta(mu, nu, f);
      Rational direct = 0;
      for (size_t j = 0; j < nu.size(); ++j) direct += f[j] * nu.atoms()[j].w;
      CHECK(s2.value == direct);
    }
  }
}

TEST_CASE("eta minimization certifies the shadow pointwise") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 12; ++t) {
    auto [mu, nu] = testing::random_pcd_pair(rng);
    DiscreteMeasure sh = shadow(mu, nu).shadow;
    for (const auto& a : nu.atoms()) {
      LpSolution s = min_over_eta(mu, nu, tabulate_put(a.x, nu));
      REQUIRE(s.status == LpStatus::Optimal);
      Rational expect = 0;
      for (const auto& b : sh.atoms()) expect += pos(a.x - b.x) * b.w;
      CHECK(s.value == expect);
    }
  }
}

TEST_CASE("coupling minimization matches the greedy cost on the shifted spread") {
  auto cost = spence_mirrlees_cost(w_mu(), w_nu());
  Coupling pi = increasing_coupling(w_mu(), w_nu());
  Rational c_pi = coupling_cost(pi, w_mu(), w_nu(), cost);
  LpSolution s = min_over_couplings(w_mu(), w_nu(), cost, TransportConstraint::Supermartingale);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.value == c_pi);
}

TEST_CASE("identity coupling has zero quadratic cost") {
  DiscreteMeasure nu = eg3_nu();
  std::vector<std::vector<Rational>> cost(nu.size(), std::vector<Rational>(nu.size()));
  for (size_t i = 0; i < nu.size(); ++i) {
    for (size_t j = 0; j < nu.size(); ++j) {
      Rational d = nu.atoms()[i].x - nu.atoms()[j].x;
      cost[i][j] = d * d;
    }
  }
  LpSolution s = min_over_couplings(nu, nu, cost, TransportConstraint::Martingale);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.value == 0);
}

TEST_CASE("brute force pcd agrees with the order check on tiny instances") {
  std::mt19937_64 rng(73);
  CHECK(brute_force_pcd(DiscreteMeasure::point(rat(0), rat(1, 2)),
                        DiscreteMeasure({{rat(-2), rat(1, 2)}, {rat(1), rat(1, 2)}}), 4));
  CHECK(!brute_force_pcd(DiscreteMeasure::point(rat(0), 1), DiscreteMeasure::point(rat(1), 1), 4));
  CHECK(brute_force_pcd(eg3_nu(), eg3_nu(), 3));
  CHECK_THROWS_AS(brute_force_pcd(DiscreteMeasure::point(rat(0), 1),
                                  DiscreteMeasure({{rat(0), rat(1, 5)},
                                                   {rat(1), rat(1, 5)},
                                                   {rat(2), rat(1, 5)},
                                                   {rat(3), rat(1, 5)},
                                                   {rat(4), rat(1, 5)}}),
                                  2),
                  std::invalid_argument);
}

TEST_CASE("spence mirrlees table is supermodular in the required sense") {
  auto cost = spence_mirrlees_cost(w_mu(), w_nu());
  REQUIRE(cost.size() == 2);
  REQUIRE(cost[0].size() == 2);
  // c(x2, .) - c(x1, .) strictly increasing in y over the target atoms.
  CHECK(cost[1][0] - cost[0][0] < cost[1][1] - cost[0][1]);
  // Frozen value on the shifted spread: the greedy optimum is 15/2.
  Coupling pi = increasing_coupling(w_mu(), w_nu());
  CHECK(coupling_cost(pi, w_mu(), w_nu(), cost) == rat(15, 2));
}
