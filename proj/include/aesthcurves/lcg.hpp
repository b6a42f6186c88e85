#pragma once

#include <utility>
#include <vector>

#include "aesthcurves/arc_length.hpp"

namespace aesth {

struct LcgSample {
  double s = 0.0;
  double x = 0.0;         // log |rho|
  double y = 0.0;         // log |ds/dX|
  double gradient = 0.0;  // dY/dX
};

struct LcgSegment {
  Interval s_range;
  std::vector<LcgSample> samples;
};

/// Log-curvature graph, one trace per maximal s-interval on which |rho| is
/// strictly monotone. `degenerate` marks curves with no such interval
/// (constant radius, or no finite radius at all), which have no graph.
struct LcgPlot {
  bool degenerate = false;
  std::vector<LcgSegment> segments;
};

/// Maximal monotone-|rho| subintervals of the arc-length range: the domain is
/// split at interior curvature sign changes (inflections) and at interior
/// sign changes of d(rho)/ds, located by bisection after a fixed 512-point
/// scan. An empty result means the radius is constant or nowhere finite.
std::vector<Interval> monotone_radius_segments(const ArcLengthCurve& c,
                                               int scan = 512);

/// Samples each monotone segment at n_samples equally spaced arc lengths
/// (midpoints of n_samples equal subintervals, so segment-end stationary
/// points are never evaluated).
LcgPlot compute_lcg(const ArcLengthCurve& c, int n_samples = 128);

/// Graph gradient dY/dX = 1 - rho rho'' / rho'^2 at arc length s. Throws
/// StationaryRadius where |rho'| vanishes against |rho| / s_all and the
/// gradient is undefined.
double lcg_gradient(const ArcLengthCurve& c, double s);

struct ConvergenceEntry {
  int M = 0;
  long N = 0;
  double interval_error = 0.0;
  double tv_error = 0.0;
};

/// Histogram-vs-graph convergence diagnostics for a monotone-|rho| curve.
/// For each (M, N): interval_error compares the measure the histogram
/// assigns to [a, b), counted through the division index just below
/// N s(X)/s_all at each endpoint, against the exact arc length carried by
/// that X interval; that count sits one s-spacing low, so the error decays
/// like s_all/N. tv_error is the total-variation distance between the
/// histogram step density and the exact density e^Y over the X range.
struct ConvergenceReport {
  std::vector<ConvergenceEntry> entries;
  bool interval_error_decreasing = false;
  bool tv_error_decreasing = false;
};

ConvergenceReport convergence_report(
    const ArcLengthCurve& c, const std::vector<std::pair<int, long>>& grid,
    Interval x_interval);

namespace detail {

/// Interior zeros of f on [range.lo, range.hi] where f changes sign between
/// adjacent scan points, refined by bisection; zeros landing exactly on an
/// interior scan node are taken as is. Sign changes (or node zeros) whose
/// flanking magnitudes all sit below floor_rel times the scan maximum are
/// treated as noise.
std::vector<double> interior_sign_changes(
    const std::function<double(double)>& f, Interval range, int scan,
    double floor_rel);

}  // namespace detail
}  // namespace aesth
