#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "aesthcurves/types.hpp"

namespace aesth {

/// One polyline in data coordinates. Non-finite points break the line into
/// separate strokes instead of being drawn.
struct PlotSeries {
  std::string label;
  std::vector<Vec2> points;
};

/// Writes a standalone SVG plot: fixed 800 x 600 viewport, the data bounding
/// box padded by 5 percent on every side, axes with ticks at round steps,
/// and one stroked polyline per series in a fixed palette. No external
/// assets. The output depends only on the arguments except for the version
/// comment near the top, which is a build constant.
void write_svg_plot(std::ostream& os, const std::vector<PlotSeries>& series,
                    const std::string& x_label, const std::string& y_label);

}  // namespace aesth
