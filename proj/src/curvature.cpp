#include "aesthcurves/curvature.hpp"

#include <cmath>
#include <memory>
#include <vector>

#include "aesthcurves/numeric.hpp"

namespace aesth {

namespace {

// |rho| beyond this multiple of the curve diameter collapses to the
// infinity sentinel; the geometry is flat at that scale.
constexpr double kRadiusCutoff = 1e14;

}  // namespace

double curvature(const Curve& c, double t) {
  const Vec2 d1 = c.derivative(t);
  const Vec2 d2 = c.second_derivative(t);
  const double speed = d1.norm();
  return det2(d1, d2) / (speed * speed * speed);
}

double curvature_radius(const Curve& c, double t) {
  const Vec2 d1 = c.derivative(t);
  const Vec2 d2 = c.second_derivative(t);
  const double speed3 = std::pow(d1.norm(), 3);
  const double den = det2(d1, d2);
  const double scale = kRadiusCutoff * std::max(c.diameter(), 1e-300);
  if (std::abs(den) * scale <= speed3) return kInfinity;
  return speed3 / den;
}

double curvature_radius_derivative(const Curve& c, double t) {
  const Vec2 d1 = c.derivative(t);
  const Vec2 d2 = c.second_derivative(t);
  const Vec2 d3 = c.third_derivative(t);
  const double det12 = det2(d1, d2);
  return (3.0 * d1.dot(d2) * det12 - d1.squaredNorm() * det2(d1, d3)) /
         (det12 * det12);
}

FrenetFrame frenet_frame(const Curve& c, double t) {
  const Vec2 tangent = c.derivative(t).normalized();
  return {tangent, Vec2(-tangent.y(), tangent.x())};
}

Curve apply_affine(const Curve& c, const AffineMap& map) {
  const double floor = 1e-12 * 0.5 * map.A.squaredNorm();
  if (std::abs(map.det()) <= floor)
    throw SingularMatrix("affine map determinant vanishes");
  const Mat2 A = map.A;
  const Vec2 b = map.b;
  return Curve(
      c.domain(), c.base_point(),
      [c, A, b](double t) -> Vec2 { return A * c.position(t) + b; },
      [c, A](double t) -> Vec2 { return A * c.derivative(t); },
      [c, A](double t) -> Vec2 { return A * c.second_derivative(t); },
      [c, A](double t) -> Vec2 { return A * c.third_derivative(t); },
      c.stencil_width());
}

bool winding_injectivity_check(const Curve& c, int n) {
  if (n < 2) throw ValidationError("winding scan needs at least 2 samples");
  double prev = 0.0, angle = 0.0;
  double lo = 0.0, hi = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = c.domain().at_fraction(static_cast<double>(i) / n);
    const Vec2 v = c.derivative(t);
    const double raw = std::atan2(v.y(), v.x());
    if (i == 0) {
      prev = raw;
    } else {
      double step = raw - prev;
      while (step > M_PI) step -= 2.0 * M_PI;
      while (step < -M_PI) step += 2.0 * M_PI;
      angle += step;
      prev = raw;
    }
    lo = std::min(lo, angle);
    hi = std::max(hi, angle);
  }
  return hi - lo < M_PI;
}

namespace {

struct FrenetState {
  double x, y, theta;
};

FrenetState rk4_step(const std::function<double(double)>& kappa,
                     const FrenetState& state, double s, double h) {
  auto f = [&kappa](double at, const FrenetState& q) {
    return FrenetState{std::cos(q.theta), std::sin(q.theta), kappa(at)};
  };
  auto add = [](const FrenetState& q, const FrenetState& d, double w) {
    return FrenetState{q.x + w * d.x, q.y + w * d.y, q.theta + w * d.theta};
  };
  const FrenetState k1 = f(s, state);
  const FrenetState k2 = f(s + 0.5 * h, add(state, k1, 0.5 * h));
  const FrenetState k3 = f(s + 0.5 * h, add(state, k2, 0.5 * h));
  const FrenetState k4 = f(s + h, add(state, k3, h));
  return FrenetState{
      state.x + h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
      state.y + h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
      state.theta +
          h / 6.0 * (k1.theta + 2.0 * k2.theta + 2.0 * k3.theta + k4.theta)};
}

}  // namespace

Curve reconstruct_from_curvature(
    const std::function<double(double)>& kappa, double s_all, int steps,
    const std::function<double(double)>& kappa_prime) {
  if (steps < 100)
    throw InvalidSteps("curvature reconstruction needs at least 100 steps");
  if (!(s_all > 0.0))
    throw ValidationError("total arc length must be positive");

  struct Grid {
    double h, s_all;
    std::function<double(double)> kappa;
    std::vector<FrenetState> states;
    FrenetState at(double s) const {
      s = std::min(std::max(s, 0.0), s_all);
      int k = static_cast<int>(std::floor(s / h));
      k = std::min(k, static_cast<int>(states.size()) - 2);
      k = std::max(k, 0);
      const double s0 = k * h;
      if (s == s0) return states[k];
      return rk4_step(kappa, states[k], s0, s - s0);
    }
  };
  auto grid = std::make_shared<Grid>();
  grid->h = s_all / steps;
  grid->s_all = s_all;
  grid->kappa = kappa;
  grid->states.reserve(steps + 1);
  FrenetState q{0.0, 0.0, 0.0};
  grid->states.push_back(q);
  for (int i = 0; i < steps; ++i) {
    q = rk4_step(kappa, q, i * grid->h, grid->h);
    grid->states.push_back(q);
  }

  std::function<double(double)> dk = kappa_prime;
  if (!dk) {
    const double h_fd = std::max(1e-5 * s_all, 1e-9);
    dk = [kappa, h_fd, s_all](double s) {
      return central_derivative(kappa, s, h_fd, 0.0, s_all);
    };
  }

  return Curve(
      {0.0, s_all}, 0.0,
      [grid](double s) {
        const FrenetState q = grid->at(s);
        return Vec2(q.x, q.y);
      },
      [grid](double s) {
        const double th = grid->at(s).theta;
        return Vec2(std::cos(th), std::sin(th));
      },
      [grid, kappa](double s) {
        const double th = grid->at(s).theta;
        return Vec2(-std::sin(th) * kappa(s), std::cos(th) * kappa(s));
      },
      [grid, kappa, dk](double s) {
        const double th = grid->at(s).theta;
        const double k = kappa(s);
        const Vec2 tangent(std::cos(th), std::sin(th));
        const Vec2 normal(-tangent.y(), tangent.x());
        return (dk(s) * normal - k * k * tangent).eval();
      });
}

}  // namespace aesth
