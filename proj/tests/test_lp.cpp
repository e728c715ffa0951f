#include "smot/lp.hpp"

#include <doctest.h>

#include <random>

using namespace smot;

namespace {
LpProblem make(std::vector<Rational> obj, std::vector<std::vector<Rational>> eq,
               std::vector<Rational> eq_rhs, std::vector<std::vector<Rational>> ub,
               std::vector<Rational> ub_rhs) {
  LpProblem p;
  p.objective = std::move(obj);
  p.eq_lhs = std::move(eq);
  p.eq_rhs = std::move(eq_rhs);
  p.ub_lhs = std::move(ub);
  p.ub_rhs = std::move(ub_rhs);
  return p;
}
}  // namespace

TEST_CASE("one variable problems") {
  // min x s.t. x >= 1 (as -x <= -1), x >= 0.
  LpSolution s = lp_solve(make({1}, {}, {}, {{-1}}, {rat(-1)}));
  CHECK(s.status == LpStatus::Optimal);
  CHECK(s.value == 1);
  CHECK(s.x == std::vector<Rational>{1});

  // min 0 s.t. x <= -1, x >= 0: infeasible.
  CHECK(lp_solve(make({0}, {}, {}, {{1}}, {rat(-1)})).status == LpStatus::Infeasible);

  // min -x, x >= 0 only: unbounded.
  CHECK(lp_solve(make({-1}, {}, {}, {}, {})).status == LpStatus::Unbounded);
}

TEST_CASE("equality constraints with exact rational data") {
  // min x + y s.t. x/2 + y/3 = 1.
  LpSolution s = lp_solve(make({1, 1}, {{rat(1, 2), rat(1, 3)}}, {1}, {}, {}));
  CHECK(s.status == LpStatus::Optimal);
  CHECK(s.value == 2);  // put everything on x (coefficient 1/2)
  CHECK(s.x == std::vector<Rational>{2, 0});
}

TEST_CASE("degenerate and redundant rows are handled") {
  // Duplicate equality rows (redundant after phase one).
  LpSolution s = lp_solve(make({1, 2}, {{1, 1}, {1, 1}}, {1, 1}, {}, {}));
  CHECK(s.status == LpStatus::Optimal);
  CHECK(s.value == 1);

  // Inconsistent duplicates: infeasible.
  CHECK(lp_solve(make({1, 2}, {{1, 1}, {1, 1}}, {1, 2}, {}, {})).status ==
        LpStatus::Infeasible);
}

TEST_CASE("optimal solutions satisfy all constraints exactly") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 40; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    auto coef = [&] { return rat(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3); };
    std::vector<Rational> obj;
    for (int i = 0; i < n; ++i) obj.push_back(coef());
    std::vector<std::vector<Rational>> eq(1), ub(1);
    for (int i = 0; i < n; ++i) {
      eq[0].push_back(rat(1) + pos(coef()));  // positive row: bounded feasible
      ub[0].push_back(coef());
    }
    LpProblem p = make(obj, eq, {rat(2)}, ub, {rat(5)});
    LpSolution s = lp_solve(p);
    REQUIRE(s.status == LpStatus::Optimal);
    Rational lhs_eq = 0, lhs_ub = 0, val = 0;
    for (int i = 0; i < n; ++i) {
      CHECK(s.x[i] >= 0);
      lhs_eq += eq[0][i] * s.x[i];
      lhs_ub += ub[0][i] * s.x[i];
      val += obj[i] * s.x[i];
    }
    CHECK(lhs_eq == 2);
    CHECK(lhs_ub <= 5);
    CHECK(val == s.value);

    // Invariance under variable permutation.
    LpProblem q = p;
    std::reverse(q.objective.begin(), q.objective.end());
    std::reverse(q.eq_lhs[0].begin(), q.eq_lhs[0].end());
    std::reverse(q.ub_lhs[0].begin(), q.ub_lhs[0].end());
    LpSolution s2 = lp_solve(q);
    REQUIRE(s2.status == LpStatus::Optimal);
    CHECK(s2.value == s.value);
  }
}
