#include "aesthcurves/lch.hpp"

#include <algorithm>
#include <cmath>

#include "aesthcurves/lcg.hpp"

namespace aesth {

LCHistogram compute_lch(const ArcLengthCurve& c, int M, long N) {
  if (M < 2) throw ValidationError("LCH needs at least 2 bins");
  if (N < M) throw ValidationError("LCH needs at least as many divisions as bins");

  // An inflection anywhere in the range makes log |rho| unbounded, whether or
  // not a division point lands on it exactly.
  const std::vector<double> inflections = detail::interior_sign_changes(
      [&c](double s) { return c.curvature(s); }, c.s_range(), 512, 1e-10);
  if (!inflections.empty())
    throw InfiniteRadius("curve has an interior inflection; split it first");

  const Interval srange = c.s_range();
  const double s_all = c.total_length();
  std::vector<double> x(N + 1);
  double x_min = kInfinity, x_max = -kInfinity;
  for (long j = 0; j <= N; ++j) {
    const double s = srange.lo + s_all * static_cast<double>(j) / N;
    const double rho = c.radius_abs(s);
    if (!std::isfinite(rho))
      throw InfiniteRadius("division point has no finite curvature radius");
    x[j] = std::log(rho);
    x_min = std::min(x_min, x[j]);
    x_max = std::max(x_max, x[j]);
  }
  if (!(x_max - x_min > 1e-9))
    throw DegenerateRange("log-radius range collapses; constant-radius curve");

  LCHistogram h;
  h.M = M;
  h.N = N;
  h.s_all = s_all;
  h.x_range = {x_min, x_max};
  h.bins.resize(M);
  const double dx = h.bin_width();
  for (int i = 0; i < M; ++i) h.bins[i].x_left = x_min + i * dx;

  // Count segment initial points j = 0..N-1; the closing point only shapes
  // the range. Half-open bins, the last one closed, so total mass is s_all.
  for (long j = 0; j < N; ++j) {
    int i = static_cast<int>((x[j] - x_min) / dx);
    i = std::max(0, std::min(i, M - 1));
    ++h.bins[i].count;
  }
  const double mass_per_point = s_all / static_cast<double>(N);
  for (int i = 0; i < M; ++i) {
    if (h.bins[i].count > 0)
      h.bins[i].y = std::log(h.bins[i].count * mass_per_point / dx);
  }
  return h;
}

}  // namespace aesth
