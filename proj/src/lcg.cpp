#include "aesthcurves/lcg.hpp"

#include <algorithm>
#include <cmath>

#include "aesthcurves/lch.hpp"
#include "aesthcurves/numeric.hpp"

namespace aesth {

namespace detail {

std::vector<double> interior_sign_changes(
    const std::function<double(double)>& f, Interval range, int scan,
    double floor_rel) {
  std::vector<double> ts(scan + 1), fs(scan + 1);
  double max_abs = 0.0;
  for (int i = 0; i <= scan; ++i) {
    ts[i] = range.at_fraction(static_cast<double>(i) / scan);
    fs[i] = f(ts[i]);
    if (std::isfinite(fs[i])) max_abs = std::max(max_abs, std::abs(fs[i]));
  }
  const double floor = floor_rel * max_abs;
  std::vector<double> zeros;
  // A zero landing exactly on a scan node never yields a negative product
  // with either neighbour, so record those nodes directly.
  for (int i = 1; i < scan; ++i)
    if (fs[i] == 0.0 &&
        (std::abs(fs[i - 1]) > floor || std::abs(fs[i + 1]) > floor))
      zeros.push_back(ts[i]);
  for (int i = 0; i < scan; ++i) {
    if (!(fs[i] * fs[i + 1] < 0.0)) continue;
    if (std::abs(fs[i]) <= floor && std::abs(fs[i + 1]) <= floor) continue;
    double lo = ts[i], hi = ts[i + 1];
    double flo = fs[i];
    for (int it = 0; it < 80 && hi - lo > 1e-15 * range.length(); ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = f(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if (flo * fm < 0.0) {
        hi = mid;
      } else {
        lo = mid;
        flo = fm;
      }
    }
    zeros.push_back(0.5 * (lo + hi));
  }
  std::sort(zeros.begin(), zeros.end());
  return zeros;
}

}  // namespace detail

namespace {

// Relative floors: |kappa| below kKappaNoise times the scan maximum is
// numerical zero, and |drho/ds| below kFlatness * |rho| / s_all everywhere
// means the radius is constant for our purposes.
constexpr double kKappaNoise = 1e-10;
constexpr double kFlatness = 1e-9;
constexpr double kMinSegmentRel = 1e-9;  // shorter segments are dropped

}  // namespace

std::vector<Interval> monotone_radius_segments(const ArcLengthCurve& c,
                                               int scan) {
  const Interval srange = c.s_range();
  const double s_all = c.total_length();

  // Degeneracy scan: constant |rho| (circle) or no finite rho at all (line).
  double max_rel_slope = 0.0;
  bool any_finite = false;
  for (int i = 0; i <= scan; ++i) {
    const double s = srange.at_fraction(static_cast<double>(i) / scan);
    const double r = c.radius(s);
    if (!std::isfinite(r)) continue;
    any_finite = true;
    const double d = c.radius_derivative(s);
    max_rel_slope = std::max(max_rel_slope,
                             std::abs(d) * s_all / std::max(std::abs(r), 1e-300));
  }
  if (!any_finite || max_rel_slope < kFlatness) return {};

  std::vector<double> cuts = detail::interior_sign_changes(
      [&c](double s) { return c.curvature(s); }, srange, scan, kKappaNoise);
  const std::vector<double> stationary = detail::interior_sign_changes(
      [&c](double s) { return c.radius_derivative(s); }, srange, scan,
      kKappaNoise);
  cuts.insert(cuts.end(), stationary.begin(), stationary.end());
  std::sort(cuts.begin(), cuts.end());

  std::vector<Interval> segments;
  double lo = srange.lo;
  const double min_len = s_all * kMinSegmentRel;
  for (double cut : cuts) {
    if (cut - lo > min_len) segments.push_back({lo, cut});
    lo = cut;
  }
  if (srange.hi - lo > min_len) segments.push_back({lo, srange.hi});
  return segments;
}

double lcg_gradient(const ArcLengthCurve& c, double s) {
  const double rho = c.radius(s);
  const double d1 = c.radius_derivative(s);
  if (!std::isfinite(rho))
    throw InfiniteRadius("gradient undefined at an inflection");
  if (std::abs(d1) * c.total_length() <
      1e-11 * std::max(std::abs(rho), 1e-300))
    throw StationaryRadius("gradient undefined where rho is stationary");
  const double d2 = c.radius_second_derivative(s);
  return 1.0 - rho * d2 / (d1 * d1);
}

LcgPlot compute_lcg(const ArcLengthCurve& c, int n_samples) {
  if (n_samples < 16)
    throw ValidationError("LCG needs at least 16 samples per segment");
  LcgPlot plot;
  const std::vector<Interval> segments = monotone_radius_segments(c);
  if (segments.empty()) {
    plot.degenerate = true;
    return plot;
  }
  for (const Interval& seg : segments) {
    LcgSegment out;
    out.s_range = seg;
    out.samples.reserve(n_samples);
    for (int k = 0; k < n_samples; ++k) {
      const double s = seg.at_fraction((k + 0.5) / n_samples);
      const double rho = c.radius_abs(s);
      const double d1 = std::abs(c.radius_derivative(s));
      LcgSample sample;
      sample.s = s;
      sample.x = std::log(rho);
      sample.y = std::log(rho) - std::log(d1);
      sample.gradient = lcg_gradient(c, s);
      out.samples.push_back(sample);
    }
    plot.segments.push_back(std::move(out));
  }
  return plot;
}

ConvergenceReport convergence_report(
    const ArcLengthCurve& c, const std::vector<std::pair<int, long>>& grid,
    Interval x_interval) {
  const std::vector<Interval> segments = monotone_radius_segments(c);
  const Interval srange = c.s_range();
  const bool single_full =
      segments.size() == 1 &&
      segments.front().lo <= srange.lo + 1e-9 * c.total_length() &&
      segments.front().hi >= srange.hi - 1e-9 * c.total_length();
  if (!single_full)
    throw NonMonotoneRadius(
        "convergence diagnostics need |rho| monotone over the whole curve");

  auto x_of_s = [&c](double s) { return std::log(c.radius_abs(s)); };
  auto dx_ds = [&c](double s) {
    return c.radius_derivative(s) / c.radius(s);
  };
  const double x_at_lo = x_of_s(srange.lo);
  const double x_at_hi = x_of_s(srange.hi);
  const bool increasing = x_at_hi > x_at_lo;

  // s carrying X values <= x, measured from the curve start.
  auto s_below = [&](double x, double hint) {
    const double x_min = std::min(x_at_lo, x_at_hi);
    const double x_max = std::max(x_at_lo, x_at_hi);
    if (x <= x_min) return increasing ? 0.0 : c.total_length();
    if (x >= x_max) return increasing ? c.total_length() : 0.0;
    const double s =
        invert_monotone(x_of_s, dx_ds, x, srange.lo, srange.hi, hint);
    return s - srange.lo;
  };
  // Arc length carried by the X interval [a, b).
  auto exact_mass = [&](double a, double b) {
    if (!(b > a)) return 0.0;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return std::abs(s_below(b, nan) - s_below(a, nan));
  };

  ConvergenceReport report;
  report.entries.resize(grid.size());
  exec::parallel_for(grid.size(), [&](std::size_t gi) {
    const auto [M, N] = grid[gi];
    const LCHistogram h = compute_lch(c, M, N);
    const double dx = h.bin_width();

    // Measure the histogram assigns to [a, b): counted through the division
    // indices just below N s(X)/s_all at both endpoints, which sits one
    // spacing below the sharp point count. That bias shrinks like s_all/N,
    // so refining the grid drives the interval error down deterministically
    // instead of leaving it to cancellation luck.
    const double a = std::max(x_interval.lo, h.x_range.lo);
    const double b = std::min(x_interval.hi, h.x_range.hi);
    double interval_err = 0.0;
    if (b > a) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      auto index_below = [&](double x) {
        // Ratio first: s/s_all is exactly 0 or 1 at the range ends, which
        // keeps ceil from slipping an index on a one-ulp product error.
        const double v =
            static_cast<double>(N) * (s_below(x, nan) / c.total_length());
        return static_cast<long>(std::ceil(v)) - 1;
      };
      const double mu = static_cast<double>(index_below(b) - index_below(a) -
                                            1) *
                        c.total_length() / static_cast<double>(N);
      interval_err = std::abs(mu - exact_mass(a, b));
    }

    // Total variation against the exact density, bin by bin.
    constexpr int kSub = 16;
    double tv = 0.0;
    double hint = std::numeric_limits<double>::quiet_NaN();
    for (int i = 0; i < h.M; ++i) {
      const double f_i = h.bins[i].y ? std::exp(*h.bins[i].y) : 0.0;
      for (int k = 0; k < kSub; ++k) {
        const double x = h.bins[i].x_left + (k + 0.5) * dx / kSub;
        const double s_here =
            invert_monotone(x_of_s, dx_ds, x, srange.lo, srange.hi, hint);
        hint = s_here;
        const double g =
            std::abs(c.radius(s_here) / c.radius_derivative(s_here));
        tv += std::abs(f_i - g) * dx / kSub;
      }
    }
    report.entries[gi] = {M, N, interval_err, 0.5 * tv};
  });

  auto decreasing = [&](auto field) {
    for (std::size_t i = 1; i < report.entries.size(); ++i)
      if (!(field(report.entries[i]) < field(report.entries[i - 1])))
        return false;
    return !report.entries.empty();
  };
  report.interval_error_decreasing =
      decreasing([](const ConvergenceEntry& e) { return e.interval_error; });
  report.tv_error_decreasing =
      decreasing([](const ConvergenceEntry& e) { return e.tv_error; });
  return report;
}

}  // namespace aesth
