#pragma once

#include "smot/measure.hpp"
#include "smot/rational.hpp"

#include <utility>
#include <vector>

namespace smot {

// A continuous piecewise-linear function on the whole line, stored as the
// left tail slope, a strictly increasing list of breakpoints (k_i, f(k_i)),
// and the right tail slope.  Globally affine functions are representable
// (one anchor breakpoint, equal tail slopes).  Construction canonicalizes:
// breakpoints where the slope does not actually change are removed, so
// equality of values implies equality of representations.
class PwlFunction {
 public:
  struct Point {
    Rational x;
    Rational y;
    friend bool operator==(const Point&, const Point&) = default;
  };

  PwlFunction(Rational left_slope, std::vector<Point> points, Rational right_slope);

  static PwlFunction affine(const Rational& slope, const Rational& x0, const Rational& y0) {
    return PwlFunction(slope, {{x0, y0}}, slope);
  }
  static PwlFunction zero() { return affine(0, 0, 0); }

  // Put potential P_eta(k) = integral of (k - x)^+ d eta; convex, vanishes
  // near -inf, right tail slope = mass(eta).
  static PwlFunction put_potential(const DiscreteMeasure& eta);
  // Call potential C_eta(k) = integral of (x - k)^+ d eta; convex, vanishes
  // near +inf, left tail slope = -mass(eta).  C - P = mean - mass * k.
  static PwlFunction call_potential(const DiscreteMeasure& eta);

  const Rational& left_slope() const { return left_slope_; }
  const Rational& right_slope() const { return right_slope_; }
  const std::vector<Point>& points() const { return points_; }

  Rational eval(const Rational& k) const;
  // One-sided derivatives.
  Rational slope_left_at(const Rational& k) const;
  Rational slope_right_at(const Rational& k) const;

  bool is_convex() const;

  // a*f + b*g, exact.
  static PwlFunction linear_combine(const Rational& a, const PwlFunction& f,
                                    const Rational& b, const PwlFunction& g);

  friend PwlFunction operator+(const PwlFunction& f, const PwlFunction& g) {
    return linear_combine(1, f, 1, g);
  }
  friend PwlFunction operator-(const PwlFunction& f, const PwlFunction& g) {
    return linear_combine(1, f, -1, g);
  }
  friend bool operator==(const PwlFunction&, const PwlFunction&) = default;

  // Largest convex minorant.  Requires left_slope <= right_slope (otherwise
  // no affine minorant exists and the hull is identically -inf); the hull's
  // tail slopes equal f's tail slopes and its tail intercepts are
  // inf_k (f(k) - slope*k), attained at breakpoints of f.
  PwlFunction convex_hull() const;

  // Contact bracket against the convex hull: (X(y), Z(y)) with
  //   X(y) = sup { x <= y : f(x) = f^c(x) },  Z(y) = inf { x >= y : f(x) = f^c(x) },
  // with -inf / +inf sentinels when the corresponding set is empty or the
  // contact set extends into a tail.
  std::pair<Extended, Extended> contact_bracket(const Rational& y) const;

  // Left derivative of a convex function (minimal subgradient at y).
  Rational min_subgradient(const Rational& y) const;

  // Second-derivative measure of a convex function whose left tail is
  // identically 0 (left slope 0 and value 0 at the first breakpoint): the
  // unique measure eta with f = P_eta.  Throws if the preconditions fail.
  DiscreteMeasure second_derivative_measure() const;

  // sup_k f(k) as an extended value (+inf iff a tail slope points up).
  Extended sup_value() const;
  // sup_k (f(k) - g(k)).
  static Extended sup_difference(const PwlFunction& f, const PwlFunction& g) {
    return (f - g).sup_value();
  }

  std::string str() const;

 private:
  Rational left_slope_;
  std::vector<Point> points_;
  Rational right_slope_;
};

}  // namespace smot
