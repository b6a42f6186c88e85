#include "aesthcurves/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace aesth {
namespace {

// Plot rectangle inside the 800 x 600 viewport, leaving room for tick and
// axis labels on the left and bottom.
constexpr double kLeft = 70.0;
constexpr double kRight = 780.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 550.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                "#9467bd", "#ff7f0e", "#8c564b"};
constexpr int kPaletteSize = 6;

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  if (v == 0.0) v = 0.0;  // collapse -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '&')
      out += "&amp;";
    else if (ch == '<')
      out += "&lt;";
    else if (ch == '>')
      out += "&gt;";
    else
      out += ch;
  }
  return out;
}

// Tick spacing of the form {1, 2, 5} * 10^k that yields roughly `target`
// intervals over `range`.
double nice_step(double range, int target) {
  double raw = range / target;
  double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double norm = raw / mag;
  double mult = norm < 1.5 ? 1.0 : norm < 3.5 ? 2.0 : norm < 7.5 ? 5.0 : 10.0;
  return mult * mag;
}

std::vector<double> ticks(double lo, double hi, int target) {
  double step = nice_step(hi - lo, target);
  std::vector<double> out;
  double v = std::ceil(lo / step - 1e-9) * step;
  for (; v <= hi + 1e-9 * (hi - lo); v += step) out.push_back(v);
  return out;
}

}  // namespace

void write_svg_plot(std::ostream& os, const std::vector<PlotSeries>& series,
                    const std::string& x_label, const std::string& y_label) {
  double x0 = kInfinity, x1 = -kInfinity;
  double y0 = kInfinity, y1 = -kInfinity;
  for (const auto& s : series)
    for (const auto& p : s.points) {
      if (!std::isfinite(p.x()) || !std::isfinite(p.y())) continue;
      x0 = std::min(x0, p.x());
      x1 = std::max(x1, p.x());
      y0 = std::min(y0, p.y());
      y1 = std::max(y1, p.y());
    }
  if (!(x0 <= x1)) {
    x0 = 0.0;
    x1 = 1.0;
  }
  if (!(y0 <= y1)) {
    y0 = 0.0;
    y1 = 1.0;
  }
  if (x1 - x0 <= 0.0) {
    double pad = 0.5 * std::max(1.0, std::abs(x0));
    x0 -= pad;
    x1 += pad;
  }
  if (y1 - y0 <= 0.0) {
    double pad = 0.5 * std::max(1.0, std::abs(y0));
    y0 -= pad;
    y1 += pad;
  }
  // 5 percent margin between the data extent and the plot frame.
  {
    double mx = 0.05 * (x1 - x0), my = 0.05 * (y1 - y0);
    x0 -= mx;
    x1 += mx;
    y0 -= my;
    y1 += my;
  }

  auto X = [&](double x) {
    return kLeft + (x - x0) / (x1 - x0) * (kRight - kLeft);
  };
  auto Y = [&](double y) {
    return kBottom - (y - y0) / (y1 - y0) * (kBottom - kTop);
  };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<!-- aesthcurves plot format 1 -->\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
        "height=\"600\" viewBox=\"0 0 800 600\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" "
        "fill=\"#ffffff\"/>\n";
  os << "<rect x=\"" << px(kLeft) << "\" y=\"" << px(kTop) << "\" width=\""
     << px(kRight - kLeft) << "\" height=\"" << px(kBottom - kTop)
     << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

  for (double v : ticks(x0, x1, 8)) {
    double gx = X(v);
    os << "<line x1=\"" << px(gx) << "\" y1=\"" << px(kBottom) << "\" x2=\""
       << px(gx) << "\" y2=\"" << px(kBottom + 5) << "\" stroke=\"#333333\" "
       << "stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << px(gx) << "\" y1=\"" << px(kTop) << "\" x2=\""
       << px(gx) << "\" y2=\"" << px(kBottom)
       << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
    os << "<text x=\"" << px(gx) << "\" y=\"" << px(kBottom + 18)
       << "\" font-family=\"monospace\" font-size=\"11\" "
       << "text-anchor=\"middle\">" << tick_label(v) << "</text>\n";
  }
  for (double v : ticks(y0, y1, 6)) {
    double gy = Y(v);
    os << "<line x1=\"" << px(kLeft - 5) << "\" y1=\"" << px(gy) << "\" x2=\""
       << px(kLeft) << "\" y2=\"" << px(gy) << "\" stroke=\"#333333\" "
       << "stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << px(kLeft) << "\" y1=\"" << px(gy) << "\" x2=\""
       << px(kRight) << "\" y2=\"" << px(gy)
       << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
    os << "<text x=\"" << px(kLeft - 8) << "\" y=\"" << px(gy + 4)
       << "\" font-family=\"monospace\" font-size=\"11\" "
       << "text-anchor=\"end\">" << tick_label(v) << "</text>\n";
  }

  os << "<text x=\"" << px(0.5 * (kLeft + kRight)) << "\" y=\"588\" "
     << "font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\">"
     << escape(x_label) << "</text>\n";
  os << "<text x=\"14\" y=\"" << px(0.5 * (kTop + kBottom)) << "\" "
     << "font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\" "
     << "transform=\"rotate(-90 14 " << px(0.5 * (kTop + kBottom)) << ")\">"
     << escape(y_label) << "</text>\n";

  int legend_row = 0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % kPaletteSize];
    // Non-finite points split the polyline into separate strokes.
    std::vector<Vec2> run;
    auto flush = [&]() {
      if (run.size() >= 2) {
        os << "<polyline fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < run.size(); ++k) {
          if (k) os << ' ';
          os << px(X(run[k].x())) << ',' << px(Y(run[k].y()));
        }
        os << "\"/>\n";
      }
      run.clear();
    };
    for (const auto& p : series[i].points) {
      if (std::isfinite(p.x()) && std::isfinite(p.y()))
        run.push_back(p);
      else
        flush();
    }
    flush();
    if (!series[i].label.empty()) {
      os << "<text x=\"" << px(kRight - 6) << "\" y=\""
         << px(kTop + 16 + 16 * legend_row) << "\" font-family=\"monospace\" "
         << "font-size=\"12\" text-anchor=\"end\" fill=\"" << color << "\">"
         << escape(series[i].label) << "</text>\n";
      ++legend_row;
    }
  }
  os << "</svg>\n";
}

}  // namespace aesth
