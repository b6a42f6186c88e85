#include "aesthcurves/curve.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace aesth {

namespace {

constexpr int kScanPoints = 257;
constexpr double kRegularityFloor = 1e-12;

}  // namespace

Curve::Curve(Interval domain, double base_point, Fn position, Fn d1, Fn d2,
             Fn d3, double stencil_width)
    : domain_(domain),
      base_point_(base_point),
      position_(std::move(position)),
      d1_(std::move(d1)),
      d2_(std::move(d2)),
      d3_(std::move(d3)),
      stencil_width_(stencil_width) {
  if (!(domain_.lo < domain_.hi))
    throw ValidationError("curve domain is empty");
  if (!domain_.contains(base_point_))
    throw ValidationError("base point outside curve domain");

  // Regularity scan: the parameterization must never stall. The floor is
  // relative to the largest speed seen so a uniformly slow parameterization
  // is fine while a local stall is not.
  double min_x = kInfinity, max_x = -kInfinity;
  double min_y = kInfinity, max_y = -kInfinity;
  double min_speed = kInfinity;
  for (int i = 0; i < kScanPoints; ++i) {
    const double t =
        domain_.at_fraction(static_cast<double>(i) / (kScanPoints - 1));
    const Vec2 p = position_(t);
    const Vec2 v = d1_(t);
    if (!p.allFinite() || !v.allFinite())
      throw DegenerateCurve("curve evaluates to a non-finite value");
    min_x = std::min(min_x, p.x());
    max_x = std::max(max_x, p.x());
    min_y = std::min(min_y, p.y());
    max_y = std::max(max_y, p.y());
    const double speed = v.norm();
    min_speed = std::min(min_speed, speed);
    speed_scale_ = std::max(speed_scale_, speed);
  }
  diameter_ = std::hypot(max_x - min_x, max_y - min_y);
  if (min_speed <= kRegularityFloor * speed_scale_ || speed_scale_ == 0.0)
    throw DegenerateCurve("parameterization stalls: |dgamma/dt| ~ 0");
}

Curve restrict_to(const Curve& c, double lo, double hi) {
  if (!(lo < hi) || !c.domain().contains(lo) || !c.domain().contains(hi))
    throw ValidationError("restriction interval outside curve domain");
  return Curve({lo, hi}, lo, [c](double t) { return c.position(t); },
               [c](double t) { return c.derivative(t); },
               [c](double t) { return c.second_derivative(t); },
               [c](double t) { return c.third_derivative(t); },
               c.stencil_width());
}

namespace detail {

std::vector<std::vector<double>> fd_weights(double x0,
                                            const std::vector<double>& nodes,
                                            int max_order) {
  const int n = static_cast<int>(nodes.size());
  const int m = max_order;
  std::vector<std::vector<std::vector<double>>> d(
      n, std::vector<std::vector<double>>(n, std::vector<double>(m + 1, 0.0)));
  d[0][0][0] = 1.0;
  double c1 = 1.0;
  for (int i = 1; i < n; ++i) {
    double c2 = 1.0;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      for (int k = 0; k <= std::min(i, m); ++k) {
        d[i][j][k] = ((nodes[i] - x0) * d[i - 1][j][k] -
                      (k > 0 ? k * d[i - 1][j][k - 1] : 0.0)) /
                     c3;
      }
    }
    for (int k = 0; k <= std::min(i, m); ++k) {
      d[i][i][k] = (c1 / c2) * ((k > 0 ? k * d[i - 1][i - 1][k - 1] : 0.0) -
                                (nodes[i - 1] - x0) * d[i - 1][i - 1][k]);
    }
    c1 = c2;
  }
  std::vector<std::vector<double>> w(m + 1, std::vector<double>(n, 0.0));
  for (int k = 0; k <= m; ++k)
    for (int j = 0; j < n; ++j) w[k][j] = d[n - 1][j][k];
  return w;
}

}  // namespace detail

Curve from_samples(std::vector<double> t, std::vector<double> x,
                   std::vector<double> y) {
  const std::size_t n = t.size();
  if (n < 5)
    throw ValidationError("sampled curve needs at least 5 points");
  if (x.size() != n || y.size() != n)
    throw ValidationError("sampled curve arrays differ in length");
  double max_gap = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(t[i]) || !std::isfinite(x[i]) || !std::isfinite(y[i]))
      throw ValidationError("sampled curve contains a non-finite value");
    if (i > 0) {
      if (!(t[i] > t[i - 1]))
        throw ValidationError("sampled curve t values must strictly increase");
      max_gap = std::max(max_gap, t[i] - t[i - 1]);
    }
  }

  struct Table {
    std::vector<double> t, x, y;
    std::size_t window_start(double at) const {
      // First index of the 5-sample window nearest to `at`.
      auto it = std::lower_bound(t.begin(), t.end(), at);
      std::size_t i = static_cast<std::size_t>(it - t.begin());
      std::size_t lo = i >= 2 ? i - 2 : 0;
      lo = std::min(lo, t.size() - 5);
      return lo;
    }
    Vec2 eval(double at, int order) const {
      const std::size_t lo = window_start(at);
      const std::vector<double> nodes(t.begin() + lo, t.begin() + lo + 5);
      const auto w = detail::fd_weights(at, nodes, order);
      Vec2 out = Vec2::Zero();
      for (int j = 0; j < 5; ++j)
        out += w[order][j] * Vec2(x[lo + j], y[lo + j]);
      return out;
    }
  };
  auto table = std::make_shared<Table>();
  table->t = std::move(t);
  table->x = std::move(x);
  table->y = std::move(y);

  const Interval domain{table->t.front(), table->t.back()};
  return Curve(
      domain, domain.lo,
      [table](double at) { return table->eval(at, 0); },
      [table](double at) { return table->eval(at, 1); },
      [table](double at) { return table->eval(at, 2); },
      [table](double at) { return table->eval(at, 3); }, max_gap);
}

}  // namespace aesth
