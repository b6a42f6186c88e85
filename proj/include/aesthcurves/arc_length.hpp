#pragma once

#include <memory>
#include <vector>

#include "aesthcurves/curve.hpp"

namespace aesth {

/// A curve together with its arc-length parameterization. s is measured from
/// the base point, so s(base_point) = 0 and the reachable range is
/// [s(t_lo), s(t_hi)] with s_lo <= 0 <= s_hi. Radius values forwarded here
/// are evaluated through the underlying parameterization at t(s).
///
/// All tables are built eagerly; instances are immutable and usable from
/// several threads at once.
class ArcLengthCurve {
 public:
  const Curve& underlying() const { return curve_; }
  Interval s_range() const { return {s_lo_, s_hi_}; }
  double total_length() const { return s_hi_ - s_lo_; }

  double s_of_t(double t) const;
  double t_of_s(double s) const;

  Vec2 position(double s) const { return curve_.position(t_of_s(s)); }

  /// Signed curvature and signed curvature radius at arc length s.
  double curvature(double s) const;
  double radius(double s) const;
  double radius_abs(double s) const;

  /// d(rho)/ds and d2(rho)/ds2 of the signed radius at arc length s. The
  /// first derivative is closed-form in the curve derivatives; the second
  /// differentiates that expression with a five-point stencil in t.
  double radius_derivative(double s) const;
  double radius_second_derivative(double s) const;

 private:
  friend ArcLengthCurve arc_length_reparam(const Curve&, double);
  explicit ArcLengthCurve(Curve c) : curve_(std::move(c)) {}

  double speed(double t) const { return curve_.derivative(t).norm(); }

  Curve curve_;
  double tol_ = 1e-10;
  double s_lo_ = 0.0, s_hi_ = 0.0;
  std::vector<double> knot_t_;  // uniform in t
  std::vector<double> knot_s_;  // cumulative, anchored at the base point
};

/// Arc-length reparameterization by adaptive quadrature of |dgamma/dt| to
/// absolute tolerance `tol`. Throws DegenerateCurve via the Curve invariant
/// when the parameterization stalls.
ArcLengthCurve arc_length_reparam(const Curve& c, double tol = 1e-10);

}  // namespace aesth
