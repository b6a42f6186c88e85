#pragma once

#include <string>
#include <vector>

#include "aesthcurves/curve.hpp"

namespace aesth {

/// A curve carrying its equiaffine (special affine) arc length sigma, defined
/// by d(sigma)/dt = |det(gamma', gamma'')|^(1/3). sigma increases with t and
/// starts at 0 on the lower parameter end. The construction requires
/// det(gamma', gamma'') to keep a single sign over the whole domain;
/// equiaffine_reparam rejects curves with inflections.
///
/// Like ArcLengthCurve, instances are table-backed, immutable, and safe to
/// share across threads.
class EquiaffineCurve {
 public:
  const Curve& underlying() const { return curve_; }
  Interval sigma_range() const { return {0.0, sigma_hi_}; }

  double sigma_of_t(double t) const;
  double t_of_sigma(double sigma) const;

  /// Sign of det(gamma', gamma''), constant by construction: +1 where the
  /// trace bends left, -1 where it bends right.
  double orientation() const { return sign_; }

  Vec2 position(double sigma) const;

  /// Derivatives of gamma with respect to sigma. They satisfy
  /// det(d_sigma, d_sigma2) = orientation() and d_sigma3 = -kappa d_sigma at
  /// every sigma.
  Vec2 d_sigma(double sigma) const;
  Vec2 d_sigma2(double sigma) const;
  Vec2 d_sigma3(double sigma) const;

  /// Normalized frame: columns (d_sigma, orientation * d_sigma2), so the
  /// determinant is +1 for either bending direction. Quotients
  /// frame(b) frame(a)^{-1} are the same with or without the orientation
  /// factor, so self-maps built from this frame are unimodular.
  Mat2 frame(double sigma) const;

  /// Equiaffine curvature. Constant on conics: (AB)^(-2/3) on an ellipse
  /// with semi-axes A, B, exactly 0 on parabolas, -(AB)^(-2/3) on
  /// hyperbolas. Scales as c^(-4/3) when the trace is scaled by c.
  double curvature(double sigma) const;

 private:
  friend EquiaffineCurve equiaffine_reparam(const Curve&, double);
  explicit EquiaffineCurve(Curve c) : curve_(std::move(c)) {}

  struct Jet {
    Vec2 g1, g2, g3;  // d/dsigma, d2/dsigma2, d3/dsigma3
  };
  Jet jet_at_t(double t) const;
  double density(double t) const;  // |det(gamma', gamma'')|^(1/3)

  Curve curve_;
  double tol_ = 1e-10;
  double sign_ = 1.0;
  double sigma_hi_ = 0.0;
  std::vector<double> knot_t_;      // uniform in t
  std::vector<double> knot_sigma_;  // cumulative, 0 at t_lo
};

/// Equiaffine reparameterization. Scans det(gamma', gamma'') over the domain
/// and throws InflectionInDomain when it vanishes or changes sign, tabulates
/// sigma by adaptive quadrature to absolute tolerance `tol`, then confirms
/// det(d_sigma, d_sigma2) = orientation at spot checkpoints.
EquiaffineCurve equiaffine_reparam(const Curve& c, double tol = 1e-10);

/// Free-function form of EquiaffineCurve::curvature.
double equiaffine_curvature(const EquiaffineCurve& c, double sigma);

/// Integrates the equiaffine Frenet system gamma''' = -kappa_sa gamma' from
/// gamma(0) = 0 with the frame started at the identity, returning the curve
/// on [0, sigma_all] parameterized by sigma. kappa_sa = 0 yields a parabola,
/// a positive value an ellipse, a negative value a hyperbola. Throws
/// InvalidSteps when steps < 100.
Curve reconstruct_equiaffine(double kappa_sa, double sigma_all, int steps);

/// The unimodular affine map sending gamma(sigma) to gamma(sigma + eps),
/// built from the frames at sigma0. For a curve of constant equiaffine
/// curvature this one map works at every sigma, which is what verify_esa
/// checks.
AffineMap equiaffine_self_map(const EquiaffineCurve& c, double sigma0,
                              double eps);

/// Closed-form shift maps of the standard conics, as unimodular affine maps
/// sending the curve point at family parameter t to the one at t + eps:
///   ellipse (A cos t, B sin t):     ((cos e, -(A/B) sin e),
///                                    ((B/A) sin e, cos e)), no offset;
///   hyperbola (A cosh t, B sinh t): ((cosh e, (A/B) sinh e),
///                                    ((B/A) sinh e, cosh e)), no offset;
///   parabola (t, t^2):              ((1, 0), (2e, 1)) with offset (e, e^2).
/// Throws InvalidParams for an unknown family or nonpositive A, B.
AffineMap esa_witness(const std::string& family, double eps, double A = 1.0,
                      double B = 1.0);

/// Outcome of the constant-equiaffine-curvature test.
struct EsaReport {
  bool holds = false;
  std::string family = "none";  // ellipse | parabola | hyperbola | none

  double kappa_sa = 0.0;         // mean equiaffine curvature over the scan
  double kappa_sa_spread = 0.0;  // max |kappa - mean| over the scan
  /// The same two numbers multiplied by diameter^(4/3), which makes them
  /// invariant under scaling of the trace.
  double kappa_sa_normalized = 0.0;
  double spread_normalized = 0.0;

  /// Largest deviation |F_eps(gamma(sigma)) - gamma(sigma + eps)| over the
  /// tested (sigma, eps), relative to the curve diameter. Includes the
  /// overhang comparison below.
  double witness_residual = kInfinity;
  /// Disagreement between the shifts' extensions of the curve on a 10%
  /// overhang past the endpoint, relative to diameter.
  double margin_residual = kInfinity;

  std::vector<double> shifts;  // sigma advances actually tested
};

/// Decides whether the curve has constant equiaffine curvature and names the
/// conic family by the sign of the mean, with a dead band of 10x the spread
/// around zero for the parabola verdict. Each eps is a sigma advance; values
/// are clamped into [0.05, 0.45] of the sigma span so the witness and the
/// overhang comparison stay inside the domain, and an empty list defaults to
/// 0.15 and 0.30 of the span. Curvature spread and both residuals are
/// compared against `tol` after normalization. InflectionInDomain from the
/// reparameterization propagates to the caller.
EsaReport verify_esa(const Curve& c, const std::vector<double>& eps_list = {},
                     double tol = 1e-6);

}  // namespace aesth
