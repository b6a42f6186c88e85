#include "aesthcurves/families.hpp"

#include <cmath>
#include <memory>
#include <vector>

#include "aesthcurves/numeric.hpp"

namespace aesth::curves {

Curve circle(double r, Interval domain, double base_point) {
  if (!(r > 0.0)) throw ValidationError("circle radius must be positive");
  return Curve(
      domain, base_point,
      [r](double t) { return Vec2(r * std::cos(t), r * std::sin(t)); },
      [r](double t) { return Vec2(-r * std::sin(t), r * std::cos(t)); },
      [r](double t) { return Vec2(-r * std::cos(t), -r * std::sin(t)); },
      [r](double t) { return Vec2(r * std::sin(t), -r * std::cos(t)); });
}

Curve line(Vec2 point, Vec2 direction, Interval domain, double base_point) {
  if (direction.norm() == 0.0)
    throw ValidationError("line direction must be nonzero");
  return Curve(
      domain, base_point,
      [point, direction](double t) -> Vec2 { return point + t * direction; },
      [direction](double) { return direction; },
      [](double) { return Vec2::Zero().eval(); },
      [](double) { return Vec2::Zero().eval(); });
}

Curve parabola(double a, double b, Interval domain, double base_point) {
  if (a == 0.0 || b == 0.0)
    throw ValidationError("parabola coefficients must be nonzero");
  return Curve(
      domain, base_point, [a, b](double t) { return Vec2(a * t, b * t * t); },
      [a, b](double t) { return Vec2(a, 2.0 * b * t); },
      [b](double) { return Vec2(0.0, 2.0 * b); },
      [](double) { return Vec2::Zero().eval(); });
}

Curve ellipse(double A, double B, Interval domain, double base_point) {
  if (!(A > 0.0) || !(B > 0.0))
    throw ValidationError("ellipse semi-axes must be positive");
  return Curve(
      domain, base_point,
      [A, B](double t) { return Vec2(A * std::cos(t), B * std::sin(t)); },
      [A, B](double t) { return Vec2(-A * std::sin(t), B * std::cos(t)); },
      [A, B](double t) { return Vec2(-A * std::cos(t), -B * std::sin(t)); },
      [A, B](double t) { return Vec2(A * std::sin(t), -B * std::cos(t)); });
}

Curve hyperbola(double A, double B, Interval domain, double base_point) {
  if (!(A > 0.0) || !(B > 0.0))
    throw ValidationError("hyperbola semi-axes must be positive");
  return Curve(
      domain, base_point,
      [A, B](double t) { return Vec2(A * std::cosh(t), B * std::sinh(t)); },
      [A, B](double t) { return Vec2(A * std::sinh(t), B * std::cosh(t)); },
      [A, B](double t) { return Vec2(A * std::cosh(t), B * std::sinh(t)); },
      [A, B](double t) { return Vec2(A * std::sinh(t), B * std::cosh(t)); });
}

Curve log_spiral(double a, double b, Interval domain, double base_point) {
  if (b == 0.0) throw ValidationError("log spiral needs a nonzero rotation rate");
  // gamma and its derivatives are (a + i b)^k exp((a + i b) t).
  auto eval = [a, b](double t, int order) {
    const double r = std::exp(a * t);
    double cx = r * std::cos(b * t), cy = r * std::sin(b * t);
    for (int k = 0; k < order; ++k) {
      const double nx = a * cx - b * cy;
      const double ny = b * cx + a * cy;
      cx = nx;
      cy = ny;
    }
    return Vec2(cx, cy);
  };
  return Curve(
      domain, base_point, [eval](double t) { return eval(t, 0); },
      [eval](double t) { return eval(t, 1); },
      [eval](double t) { return eval(t, 2); },
      [eval](double t) { return eval(t, 3); });
}

Curve clothoid(double a, Interval domain, double base_point) {
  if (a == 0.0) throw ValidationError("clothoid rate must be nonzero");
  // Cumulative position table at uniform knots; an evaluation integrates
  // from the nearest knot so each call does a short, well-conditioned
  // quadrature regardless of |t|.
  constexpr int kKnots = 257;
  struct Table {
    double a, t0, dt;
    std::vector<Vec2> knots;
    Vec2 position(double t) const {
      double idx = (t - t0) / dt;
      int i = static_cast<int>(std::floor(idx + 0.5));
      i = std::max(0, std::min(i, static_cast<int>(knots.size()) - 1));
      const double tk = t0 + i * dt;
      const double aa = a;
      return knots[i] +
             Vec2(integrate([aa](double u) { return std::cos(aa * u * u); },
                            tk, t, 1e-13),
                  integrate([aa](double u) { return std::sin(aa * u * u); },
                            tk, t, 1e-13));
    }
  };
  auto table = std::make_shared<Table>();
  table->a = a;
  table->t0 = domain.lo;
  table->dt = domain.length() / (kKnots - 1);
  table->knots.resize(kKnots);
  Vec2 acc(integrate([a](double u) { return std::cos(a * u * u); }, 0.0,
                     domain.lo, 1e-13),
           integrate([a](double u) { return std::sin(a * u * u); }, 0.0,
                     domain.lo, 1e-13));
  table->knots[0] = acc;
  for (int i = 1; i < kKnots; ++i) {
    const double lo = domain.lo + (i - 1) * table->dt;
    const double hi = domain.lo + i * table->dt;
    acc += Vec2(integrate([a](double u) { return std::cos(a * u * u); }, lo,
                          hi, 1e-14),
                integrate([a](double u) { return std::sin(a * u * u); }, lo,
                          hi, 1e-14));
    table->knots[i] = acc;
  }
  return Curve(
      domain, base_point,
      [table](double t) { return table->position(t); },
      [a](double t) {
        const double p = a * t * t;
        return Vec2(std::cos(p), std::sin(p));
      },
      [a](double t) {
        const double p = a * t * t;
        return Vec2(-2.0 * a * t * std::sin(p), 2.0 * a * t * std::cos(p));
      },
      [a](double t) {
        const double p = a * t * t;
        const double c = std::cos(p), s = std::sin(p);
        return Vec2(-2.0 * a * s - 4.0 * a * a * t * t * c,
                    2.0 * a * c - 4.0 * a * a * t * t * s);
      });
}

}  // namespace aesth::curves
