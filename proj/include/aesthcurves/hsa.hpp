#pragma once

#include <string>
#include <vector>

#include "aesthcurves/curve.hpp"

namespace aesth {

/// Affine map carrying the standard parabola (t, t^2) over [0, 1] onto its
/// own arc over [t0, t1]: with the parameter change p = (t1 - t0) t + t0 the
/// map is A = ((t1-t0, 0), (2 t0 (t1-t0), (t1-t0)^2)), b = (t0, t0^2), and
/// det A = (t1-t0)^3. Throws EmptyInterval when t0 >= t1.
AffineMap parabola_subcurve_affine(double t0, double t1);

/// Parallelogram attached to the arc of (t, t^2) over [a, b]: anchored at
/// (a, a^2) and spanned by v1 = (b - a, 2ab) and v2 = (0, (a + b)^2). Points
/// of the arc have coordinates gamma(t) = anchor + u v1 + w v2 with u in
/// [0, 1]; contains_arc records whether the arc also keeps |w| <= 1, which
/// holds for arcs on one side of the apex but not in general. v2 collapses
/// when b = -a; such arcs are flagged degenerate instead.
struct ArcParallelogram {
  Vec2 anchor;
  Vec2 v1, v2;
  bool degenerate = false;
  bool contains_arc = false;
  /// Range of the w coordinate over the arc (0 at t = a).
  double w_min = 0.0, w_max = 0.0;
};

ArcParallelogram bounding_parallelogram(double a, double b);

/// One verified subcurve self-affinity: `map` carries the whole trace onto
/// the trace over `interval` (given in the curve's own parameter), with the
/// largest pointwise error recorded relative to the curve diameter.
struct HsaWitness {
  Interval interval{0.0, 0.0};
  AffineMap map;
  double residual = kInfinity;
};

/// Outcome of the subcurve self-affinity test. Lines pass trivially (any
/// affine map between subsegments works); parabolas pass with conjugated
/// standard-position maps; every other curve fails.
struct HsaReport {
  bool holds = false;
  std::string classification = "neither";  // line | parabola | neither
  std::vector<HsaWitness> witnesses;       // one per requested interval
  double max_residual = kInfinity;
  /// Flatness evidence backing the classification: max |kappa| * diameter
  /// for lines, max |equiaffine kappa| * diameter^(4/3) for parabolas.
  double curvature_residual = kInfinity;
};

/// Decides whether every subcurve of the curve is an affine image of the
/// whole curve. Screens the tangent winding first, then tests for a line,
/// then for a parabola through the equiaffine curvature; on either positive
/// a witness map is built for each requested subinterval (fractions of the
/// parameter range, so values in [0, 1]) and checked pointwise against the
/// whole trace. An empty interval list falls back to [0, 0.5] and
/// [0.3, 0.9]. Geometric failure never throws; it reports holds = false.
HsaReport verify_hsa(const Curve& c,
                     const std::vector<Interval>& intervals = {},
                     double tol = 1e-8);

}  // namespace aesth
