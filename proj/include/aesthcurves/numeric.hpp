#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>

#include "aesthcurves/types.hpp"

namespace aesth {

/// Adaptive quadrature of f over [a, b] built on a 7/15 Gauss-Kronrod pair
/// with recursive bisection. `tol` is treated as an absolute target on the
/// whole interval and split between halves.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10);

/// Solve g(t) = y for t in [lo, hi] where g is continuous and strictly
/// monotone. Newton iterations from the midpoint (or `hint`) with a bisection
/// safeguard; `dg` may be empty, in which case pure bisection is used.
double invert_monotone(const std::function<double(double)>& g,
                       const std::function<double(double)>& dg, double y,
                       double lo, double hi,
                       double hint = std::numeric_limits<double>::quiet_NaN());

/// Fourth-order central difference d/dt f(t). The stencil is shifted when it
/// would leave [lo, hi].
double central_derivative(const std::function<double(double)>& f, double t,
                          double h, double lo = -kInfinity,
                          double hi = kInfinity);

/// Golden-section minimization of f on [a, b] down to an interval of width
/// `tol`; returns the abscissa of the best point seen.
double golden_minimize(const std::function<double(double)>& f, double a,
                       double b, double tol, int max_iter = 200);

/// Uniform double in [0, 1) from the engine's raw bits. The standard
/// distributions are implementation-defined; this keeps corpora reproducible
/// across standard libraries.
inline double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& eng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(eng);
}

namespace exec {

/// Thread budget for embarrassingly parallel loops. Reads the
/// AESTH_CURVES_THREADS environment variable; 0 means sequential.
int max_threads();

/// Runs fn(i) for i in [0, n). Results must be written to index-keyed slots
/// so the outcome does not depend on the schedule.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace exec
}  // namespace aesth
