#pragma once

#include <Eigen/Core>
#include <optional>

#include "aesthcurves/arc_length.hpp"

namespace aesth {

/// Parameters of the log-aesthetic radius law
///   rho(s) = (xi s + eta)^(1/alpha)   for alpha != 0,
///   rho(s) = exp(xi s + eta)          for alpha = 0,
/// on an s-interval where xi s + eta >= 0. The graph of log rho against
/// log |ds/d log rho| is a line of slope alpha.
struct LacParams {
  double alpha = 1.0;
  double xi = 1.0;
  double eta = 0.0;
  Interval domain{0.0, 1.0};
};

/// rho(s); throws DomainViolation outside {xi s + eta >= 0} (alpha != 0).
double lac_radius(const LacParams& p, double s);

/// d(rho)/ds, closed form on the valid interior.
double lac_radius_derivative(const LacParams& p, double s);

/// The curve realizing the radius law, built by integrating the Frenet
/// system with kappa = 1 / rho. The parameter is arc length from
/// p.domain.lo, so the returned curve lives on [0, domain length].
Curve generate_lac(const LacParams& p, int steps = 10000);

/// Outcome of fitting (s, rho) samples against the radius laws reachable in
/// this family: the two LAC branches plus their degenerate limits, constant
/// rho (circle) and rho -> infinity (line).
struct LacFit {
  enum class Kind { lac, circle, line, none };
  Kind kind = Kind::none;
  std::optional<LacParams> params;  // set for Kind::lac
  double circle_radius = 0.0;      // set for Kind::circle
  double residual = kInfinity;     // winner's residual, or best seen if none
};

/// Branch residuals are max relative deviations of the fitted law from the
/// samples (for the line branch, the largest |s_span / rho|). A branch wins
/// only when its residual is under `tol` and decisively under the runner-up;
/// near-ties go to the more degenerate branch, since a circle is the limit
/// of every other law. At least 8 samples with strictly increasing s are
/// required; rho may be +infinity (flat samples) but not zero.
LacFit fit_lac(const Eigen::ArrayXd& s, const Eigen::ArrayXd& rho,
               double tol = 1e-6);

}  // namespace aesth
