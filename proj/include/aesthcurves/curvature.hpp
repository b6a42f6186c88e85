#pragma once

#include <functional>

#include "aesthcurves/curve.hpp"

namespace aesth {

/// Signed curvature det(gamma', gamma'') / |gamma'|^3 at parameter t.
double curvature(const Curve& c, double t);

/// Signed curvature radius |gamma'|^3 / det(gamma', gamma'') at parameter t.
/// Near an inflection the determinant vanishes and the radius is reported as
/// the infinity sentinel rather than an error: the cutoff is |rho| exceeding
/// 1e14 times the curve diameter.
double curvature_radius(const Curve& c, double t);

/// d(rho)/ds at parameter t, from derivatives up to third order:
///   [3 (g'.g'') det(g', g'') - |g'|^2 det(g', g''')] / det(g', g'')^2.
double curvature_radius_derivative(const Curve& c, double t);

/// Unit tangent and leftward unit normal at parameter t.
FrenetFrame frenet_frame(const Curve& c, double t);

/// Image curve t -> A gamma(t) + b. Derivatives transform by A alone, so the
/// image is exact wherever the source is. Throws SingularMatrix when det A
/// vanishes against the scale of A.
Curve apply_affine(const Curve& c, const AffineMap& map);

/// True when the unwrapped tangent angle stays within an open range of
/// length pi over n scan samples, i.e. the tangent direction (equivalently
/// the graph gradient) is injective. A necessary screen for the subcurve
/// self-affinity test.
bool winding_injectivity_check(const Curve& c, int n = 512);

/// Unit-speed curve on [0, s_all] with curvature kappa(s), from gamma(0) = 0,
/// gamma'(0) = (1, 0). The tangent-angle form of the Frenet system is
/// integrated with the classical fourth-order Runge-Kutta scheme in `steps`
/// fixed steps; evaluation between grid points takes one partial step from
/// the nearest node below, so the dense output has the same order as the
/// grid. If the derivative of kappa is known analytically, pass it as
/// `kappa_prime`; otherwise a five-point stencil of kappa is used for the
/// third-derivative callable.
Curve reconstruct_from_curvature(
    const std::function<double(double)>& kappa, double s_all, int steps,
    const std::function<double(double)>& kappa_prime = nullptr);

}  // namespace aesth
