#pragma once

#include "aesthcurves/curve.hpp"

namespace aesth::curves {

/// (r cos t, r sin t)
Curve circle(double r, Interval domain = {0.0, 6.283185307179586},
             double base_point = 0.0);

/// (x0 + t dx, y0 + t dy)
Curve line(Vec2 point, Vec2 direction, Interval domain = {0.0, 1.0},
           double base_point = 0.0);

/// (a t, b t^2)
Curve parabola(double a, double b, Interval domain, double base_point);

/// (A cos t, B sin t)
Curve ellipse(double A, double B, Interval domain = {0.0, 6.283185307179586},
              double base_point = 0.0);

/// One branch of (A cosh t, B sinh t).
Curve hyperbola(double A, double B, Interval domain, double base_point);

/// exp((a + i b) t), traced in the plane.
Curve log_spiral(double a, double b, Interval domain, double base_point);

/// Integral of exp(i a u^2) from 0 to t: unit speed, curvature 2 a t.
/// Positions come from an adaptive-quadrature table built on construction.
Curve clothoid(double a, Interval domain, double base_point);

}  // namespace aesth::curves
