#include "smot/pwl.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace smot {

namespace {

Rational segment_slope(const PwlFunction::Point& a, const PwlFunction::Point& b) {
  return (b.y - a.y) / (b.x - a.x);
}

}  // namespace

PwlFunction::PwlFunction(Rational left_slope, std::vector<Point> points, Rational right_slope)
    : left_slope_(std::move(left_slope)), right_slope_(std::move(right_slope)) {
  if (points.empty()) throw std::invalid_argument("PwlFunction: needs at least one breakpoint");
  for (size_t i = 1; i < points.size(); ++i)
    if (points[i - 1].x >= points[i].x)
      throw std::invalid_argument("PwlFunction: breakpoints must be strictly increasing");

  // Canonicalize: keep a breakpoint only where the slope actually changes.
  const size_t n = points.size();
  for (size_t i = 0; i < n; ++i) {
    Rational before = i == 0 ? left_slope_ : segment_slope(points[i - 1], points[i]);
    Rational after = i + 1 == n ? right_slope_ : segment_slope(points[i], points[i + 1]);
    if (before != after) points_.push_back(points[i]);
  }
  if (points_.empty()) {
    // Globally affine; normalize the anchor to x = 0 so equal functions
    // compare equal regardless of which breakpoints they were built from.
    if (left_slope_ != right_slope_)
      throw std::logic_error("PwlFunction: inconsistent affine tails");  // unreachable
    const Point& p = points.front();
    points_.push_back({Rational(0), p.y - left_slope_ * p.x});
  }
}

PwlFunction PwlFunction::put_potential(const DiscreteMeasure& eta) {
  if (eta.is_zero()) return zero();
  std::vector<Point> pts;
  for (auto& a : eta.atoms()) {
    Rational v = 0;
    for (auto& b : eta.atoms())
      if (b.x <= a.x) v += b.w * (a.x - b.x);
    pts.push_back({a.x, v});
  }
  return PwlFunction(0, std::move(pts), eta.mass());
}

PwlFunction PwlFunction::call_potential(const DiscreteMeasure& eta) {
  if (eta.is_zero()) return zero();
  std::vector<Point> pts;
  for (auto& a : eta.atoms()) {
    Rational v = 0;
    for (auto& b : eta.atoms())
      if (b.x >= a.x) v += b.w * (b.x - a.x);
    pts.push_back({a.x, v});
  }
  return PwlFunction(-eta.mass(), std::move(pts), 0);
}

Rational PwlFunction::eval(const Rational& k) const {
  if (k <= points_.front().x) return points_.front().y + left_slope_ * (k - points_.front().x);
  if (k >= points_.back().x) return points_.back().y + right_slope_ * (k - points_.back().x);
  for (size_t i = 1; i < points_.size(); ++i)
    if (k <= points_[i].x)
      return points_[i - 1].y + segment_slope(points_[i - 1], points_[i]) * (k - points_[i - 1].x);
  return points_.back().y;  // unreachable
}

Rational PwlFunction::slope_left_at(const Rational& k) const {
  if (k <= points_.front().x) return left_slope_;
  for (size_t i = 1; i < points_.size(); ++i)
    if (k <= points_[i].x) return segment_slope(points_[i - 1], points_[i]);
  return right_slope_;
}

Rational PwlFunction::slope_right_at(const Rational& k) const {
  if (k < points_.front().x) return left_slope_;
  for (size_t i = 1; i < points_.size(); ++i)
    if (k < points_[i].x) return segment_slope(points_[i - 1], points_[i]);
  return right_slope_;
}

bool PwlFunction::is_convex() const {
  Rational prev = left_slope_;
  for (size_t i = 1; i < points_.size(); ++i) {
    Rational s = segment_slope(points_[i - 1], points_[i]);
    if (s < prev) return false;
    prev = s;
  }
  return right_slope_ >= prev;
}

PwlFunction PwlFunction::linear_combine(const Rational& a, const PwlFunction& f,
                                        const Rational& b, const PwlFunction& g) {
  std::set<Rational> xs;
  for (auto& p : f.points_) xs.insert(p.x);
  for (auto& p : g.points_) xs.insert(p.x);
  std::vector<Point> pts;
  for (auto& x : xs) pts.push_back({x, a * f.eval(x) + b * g.eval(x)});
  return PwlFunction(a * f.left_slope_ + b * g.left_slope_, std::move(pts),
                     a * f.right_slope_ + b * g.right_slope_);
}

PwlFunction PwlFunction::convex_hull() const {
  if (left_slope_ > right_slope_)
    throw std::domain_error("convex_hull: left tail slope exceeds right tail slope, hull is -inf");

  // Tail intercepts inf_k (f - s*k), attained at breakpoints because the
  // tails themselves have slopes left_slope_/right_slope_.
  size_t arg_left = 0, arg_right = 0;
  Rational best_left = points_[0].y - left_slope_ * points_[0].x;
  Rational best_right = points_[0].y - right_slope_ * points_[0].x;
  for (size_t i = 1; i < points_.size(); ++i) {
    Rational bl = points_[i].y - left_slope_ * points_[i].x;
    if (bl <= best_left) {  // rightmost minimizer
      best_left = bl;
      arg_left = i;
    }
    Rational br = points_[i].y - right_slope_ * points_[i].x;
    if (br < best_right) {  // leftmost minimizer
      best_right = br;
      arg_right = i;
    }
  }

  if (left_slope_ == right_slope_)
    return affine(left_slope_, points_[arg_left].x, points_[arg_left].y);

  // Between the two tail contacts, take the lower convex hull of the
  // breakpoints (monotone chain).
  std::vector<Point> chain;
  for (size_t i = arg_left; i <= arg_right; ++i) {
    const Point& p = points_[i];
    while (chain.size() >= 2 &&
           segment_slope(chain[chain.size() - 2], chain.back()) >= segment_slope(chain.back(), p))
      chain.pop_back();
    chain.push_back(p);
  }
  return PwlFunction(left_slope_, std::move(chain), right_slope_);
}

std::pair<Extended, Extended> PwlFunction::contact_bracket(const Rational& y) const {
  PwlFunction gap = *this - convex_hull();  // >= 0 everywhere
  if (gap.eval(y) == 0) return {Extended(y), Extended(y)};

  // Every boundary point of the contact set {gap = 0} is a slope change of
  // gap, hence a canonical breakpoint; its tails are flat.
  Extended lo = Extended::neg_inf(), hi = Extended::pos_inf();
  for (auto it = gap.points_.rbegin(); it != gap.points_.rend(); ++it)
    if (it->x < y && gap.eval(it->x) == 0) {
      lo = Extended(it->x);
      break;
    }
  for (auto& p : gap.points_)
    if (p.x > y && gap.eval(p.x) == 0) {
      hi = Extended(p.x);
      break;
    }
  return {lo, hi};
}

Rational PwlFunction::min_subgradient(const Rational& y) const {
  if (!is_convex()) throw std::domain_error("min_subgradient: function is not convex");
  return slope_left_at(y);
}

DiscreteMeasure PwlFunction::second_derivative_measure() const {
  if (!is_convex()) throw std::domain_error("second_derivative_measure: not convex");
  if (left_slope_ != 0 || points_.front().y != 0)
    throw std::domain_error("second_derivative_measure: left tail is not identically zero");
  std::vector<Atom> atoms;
  for (size_t i = 0; i < points_.size(); ++i) {
    Rational before = i == 0 ? left_slope_ : segment_slope(points_[i - 1], points_[i]);
    Rational after = i + 1 == points_.size() ? right_slope_ : segment_slope(points_[i], points_[i + 1]);
    if (after != before) atoms.push_back({points_[i].x, after - before});
  }
  return DiscreteMeasure(std::move(atoms));
}

Extended PwlFunction::sup_value() const {
  if (left_slope_ < 0 || right_slope_ > 0) return Extended::pos_inf();
  Rational best = points_[0].y;
  for (auto& p : points_) best = std::max(best, p.y);
  return Extended(best);
}

std::string PwlFunction::str() const {
  std::ostringstream os;
  os << "slope " << to_string(left_slope_) << " | ";
  for (auto& p : points_) os << "(" << to_string(p.x) << "," << to_string(p.y) << ") ";
  os << "| slope " << to_string(right_slope_);
  return os.str();
}

}  // namespace smot
