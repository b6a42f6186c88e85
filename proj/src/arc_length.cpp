#include "aesthcurves/arc_length.hpp"

#include <algorithm>
#include <cmath>

#include "aesthcurves/curvature.hpp"
#include "aesthcurves/numeric.hpp"

namespace aesth {

namespace {
constexpr int kKnotCells = 512;
}

ArcLengthCurve arc_length_reparam(const Curve& c, double tol) {
  ArcLengthCurve alc(c);
  alc.tol_ = tol;
  const Interval dom = c.domain();
  const double cell_tol = tol / kKnotCells;

  alc.knot_t_.resize(kKnotCells + 1);
  alc.knot_s_.resize(kKnotCells + 1);
  for (int i = 0; i <= kKnotCells; ++i)
    alc.knot_t_[i] = dom.at_fraction(static_cast<double>(i) / kKnotCells);

  auto speed = [&c](double t) { return c.derivative(t).norm(); };
  double acc = 0.0;
  alc.knot_s_[0] = 0.0;
  for (int i = 1; i <= kKnotCells; ++i) {
    acc += integrate(speed, alc.knot_t_[i - 1], alc.knot_t_[i], cell_tol);
    alc.knot_s_[i] = acc;
  }

  // Anchor s = 0 at the base point.
  const double base = c.base_point();
  const auto it = std::upper_bound(alc.knot_t_.begin(), alc.knot_t_.end(),
                                   base);
  const std::size_t cell =
      std::min<std::size_t>(it - alc.knot_t_.begin(), kKnotCells);
  const std::size_t k = cell == 0 ? 0 : cell - 1;
  const double s_base =
      alc.knot_s_[k] + integrate(speed, alc.knot_t_[k], base, cell_tol);
  for (double& s : alc.knot_s_) s -= s_base;
  alc.s_lo_ = alc.knot_s_.front();
  alc.s_hi_ = alc.knot_s_.back();
  return alc;
}

double ArcLengthCurve::s_of_t(double t) const {
  const Interval dom = curve_.domain();
  if (!dom.contains(t, 1e-9 * dom.length()))
    throw DomainViolation("parameter outside curve domain");
  t = dom.clamp(t);
  const auto it = std::upper_bound(knot_t_.begin(), knot_t_.end(), t);
  std::size_t k = static_cast<std::size_t>(it - knot_t_.begin());
  k = k == 0 ? 0 : k - 1;
  k = std::min(k, knot_t_.size() - 2);
  // Integrate from the nearer side of the cell.
  const double cell_tol = tol_ / kKnotCells;
  auto speed_fn = [this](double u) { return speed(u); };
  if (t - knot_t_[k] <= knot_t_[k + 1] - t)
    return knot_s_[k] + integrate(speed_fn, knot_t_[k], t, cell_tol);
  return knot_s_[k + 1] - integrate(speed_fn, t, knot_t_[k + 1], cell_tol);
}

double ArcLengthCurve::t_of_s(double s) const {
  const double span = s_hi_ - s_lo_;
  if (s < s_lo_ - 1e-9 * span || s > s_hi_ + 1e-9 * span)
    throw DomainViolation("arc length outside curve range");
  s = std::min(std::max(s, s_lo_), s_hi_);
  const auto it = std::upper_bound(knot_s_.begin(), knot_s_.end(), s);
  std::size_t k = static_cast<std::size_t>(it - knot_s_.begin());
  k = k == 0 ? 0 : k - 1;
  k = std::min(k, knot_s_.size() - 2);
  if (s == knot_s_[k]) return knot_t_[k];
  return invert_monotone([this](double t) { return s_of_t(t); },
                         [this](double t) { return speed(t); }, s, knot_t_[k],
                         knot_t_[k + 1]);
}

double ArcLengthCurve::curvature(double s) const {
  return aesth::curvature(curve_, t_of_s(s));
}

double ArcLengthCurve::radius(double s) const {
  return curvature_radius(curve_, t_of_s(s));
}

double ArcLengthCurve::radius_abs(double s) const {
  return std::abs(radius(s));
}

double ArcLengthCurve::radius_derivative(double s) const {
  return curvature_radius_derivative(curve_, t_of_s(s));
}

double ArcLengthCurve::radius_second_derivative(double s) const {
  const double t = t_of_s(s);
  const Interval dom = curve_.domain();
  const double h = std::max(1e-4 * dom.length(), 4e-7 * (1.0 + std::abs(t)));
  const double dds = central_derivative(
      [this](double u) { return curvature_radius_derivative(curve_, u); }, t,
      h, dom.lo, dom.hi);
  return dds / speed(t);
}

}  // namespace aesth
