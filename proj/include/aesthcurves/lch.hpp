#pragma once

#include <optional>
#include <vector>

#include "aesthcurves/arc_length.hpp"

namespace aesth {

struct LchBin {
  double x_left = 0.0;
  long count = 0;
  std::optional<double> y;  // empty bins carry no density value
};

/// Log-curvature histogram: X = log |rho| split into M equal bins over the
/// observed X range, filled from N equal-arc-length curve segments. The bin
/// value is Y_i = log(count_i (s_all / N) / |R_i|), the log of the arc
/// length density over the bin.
struct LCHistogram {
  int M = 0;
  long N = 0;
  double s_all = 0.0;
  Interval x_range;
  std::vector<LchBin> bins;

  double bin_width() const { return x_range.length() / M; }
};

/// Builds the histogram from division points at s_j = s_lo + j s_all / N.
/// All N + 1 points define the X range; the N segment initial points
/// (j = 0..N-1) are counted into half-open bins, the last bin closed, so the
/// counted mass is exactly s_all. Curves containing an inflection have
/// unbounded |rho| and are rejected: split them into inflection-free pieces
/// first.
LCHistogram compute_lch(const ArcLengthCurve& c, int M, long N);

}  // namespace aesth
