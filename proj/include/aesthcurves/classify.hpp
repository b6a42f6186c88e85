#pragma once

#include <optional>
#include <string>

#include "aesthcurves/curve.hpp"
#include "aesthcurves/lac.hpp"

namespace aesth {

/// Tolerances for classify_curve. The defaults suit curves with exact
/// derivative callables; sampled() loosens both for curves built from point
/// data, where finite-difference noise sets the floor.
struct ClassifyTols {
  double fit = 1e-6;  // radius-law residual, relative
  double esa = 1e-6;  // normalized equiaffine spread and witness residuals

  static ClassifyTols analytic() { return {}; }
  static ClassifyTols sampled() { return {1e-3, 1e-3}; }
};

/// Verdict of classify_curve with the evidence from both stages. `residual`
/// belongs to the winning family; the stage fields record what each test
/// measured whether or not it won.
struct Classification {
  std::string family = "other";
  // line | circle | lac | parabola | ellipse | hyperbola | other
  double residual = kInfinity;

  std::optional<LacParams> lac;   // family == "lac", in the curve's own units
  double circle_radius = 0.0;     // family == "circle"
  double kappa_equiaffine = 0.0;  // conics, normalized by diameter^(4/3)

  /// Stage residuals: best radius-law fit residual, and the normalized
  /// equiaffine curvature spread (infinite when that stage was not reached
  /// or the curve has no equiaffine parameterization).
  double fit_residual = kInfinity;
  double esa_residual = kInfinity;
};

/// Names the curve's family. Radius laws are tried first on arc-length
/// samples of |rho|, so a circle reports as "circle" rather than as the
/// ellipse it also is; curves without a radius law are then tested for
/// constant equiaffine curvature, which separates the remaining conics.
Classification classify_curve(
    const Curve& c, const ClassifyTols& tols = ClassifyTols::analytic());

}  // namespace aesth
