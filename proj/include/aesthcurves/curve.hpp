#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "aesthcurves/types.hpp"

namespace aesth {

/// A regular planar curve given by evaluable position and derivatives up to
/// third order on a closed parameter interval. Analytic families supply exact
/// derivative callables; curves built from point samples carry
/// finite-difference estimates and record the stencil width used.
///
/// Instances are immutable after construction and safe to share across
/// threads.
class Curve {
 public:
  using Fn = std::function<Vec2(double)>;

  Curve(Interval domain, double base_point, Fn position, Fn d1, Fn d2, Fn d3,
        double stencil_width = 0.0);

  const Interval& domain() const { return domain_; }
  double base_point() const { return base_point_; }
  double stencil_width() const { return stencil_width_; }

  Vec2 position(double t) const { return position_(t); }
  Vec2 derivative(double t) const { return d1_(t); }
  Vec2 second_derivative(double t) const { return d2_(t); }
  Vec2 third_derivative(double t) const { return d3_(t); }

  /// Largest |dgamma/dt| seen on the construction-time regularity scan.
  double speed_scale() const { return speed_scale_; }

  /// Corner-to-corner diagonal of the position bounding box, sampled on a
  /// fixed grid. Used as the length scale for relative tolerances.
  double diameter() const { return diameter_; }

 private:
  Interval domain_;
  double base_point_;
  Fn position_, d1_, d2_, d3_;
  double stencil_width_;
  double speed_scale_ = 0.0;
  double diameter_ = 0.0;
};

/// Same trace restricted to [lo, hi]; the base point moves to lo.
Curve restrict_to(const Curve& c, double lo, double hi);

/// Curve through samples (t_i, x_i, y_i) with strictly increasing t.
/// Position and derivatives come from the degree-4 polynomial through the
/// five nearest samples, so interior derivative estimates are the classical
/// five-point stencils and the boundary ones are their one-sided
/// counterparts.
Curve from_samples(std::vector<double> t, std::vector<double> x,
                   std::vector<double> y);

namespace detail {

/// Finite-difference weights for the m-th derivative at x0 from the given
/// nodes (Fornberg's recurrence). weights[k][j] multiplies f(node j) in the
/// k-th derivative estimate, k <= max_order.
std::vector<std::vector<double>> fd_weights(double x0,
                                            const std::vector<double>& nodes,
                                            int max_order);

}  // namespace detail
}  // namespace aesth
