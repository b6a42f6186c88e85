#include "aesthcurves/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace aesth {

namespace {

// 15-point Kronrod nodes on [-1, 1] (symmetric; odd entries form the
// embedded 7-point Gauss rule).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct GkResult {
  double value;
  double error;
};

GkResult gauss_kronrod(const std::function<double(double)>& f, double a,
                       double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  double kronrod = 0.0;
  for (int i = 0; i < 7; ++i) kronrod += kWgk[i] * (fv[i] + fv[14 - i]);
  kronrod += kWgk[7] * fv[7];
  double gauss = kWg[3] * fv[7];
  for (int i = 0; i < 3; ++i) gauss += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  return {kronrod * h, std::abs(kronrod - gauss) * h};
}

double integrate_rec(const std::function<double(double)>& f, double a, double b,
                     double tol, int depth) {
  const GkResult r = gauss_kronrod(f, a, b);
  if (r.error <= tol || depth >= 48) return r.value;
  const double c = 0.5 * (a + b);
  return integrate_rec(f, a, c, 0.5 * tol, depth + 1) +
         integrate_rec(f, c, b, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  if (a == b) return 0.0;
  if (a > b) return -integrate(f, b, a, tol);
  return integrate_rec(f, a, b, tol, 0);
}

double invert_monotone(const std::function<double(double)>& g,
                       const std::function<double(double)>& dg, double y,
                       double lo, double hi, double hint) {
  double glo = g(lo) - y;
  double ghi = g(hi) - y;
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  const bool increasing = ghi > glo;
  double t = std::isfinite(hint) && hint > lo && hint < hi ? hint
                                                           : 0.5 * (lo + hi);
  const double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
  for (int it = 0; it < 100; ++it) {
    const double gt = g(t) - y;
    if (gt == 0.0) return t;
    const bool above = increasing ? gt > 0.0 : gt < 0.0;
    if (above)
      hi = t;
    else
      lo = t;
    double next = t;
    if (dg) {
      const double d = dg(t);
      if (d != 0.0) next = t - gt / d;
    }
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - t) <= 1e-15 * scale) return next;
    t = next;
  }
  return t;
}

double central_derivative(const std::function<double(double)>& f, double t,
                          double h, double lo, double hi) {
  // Five-point stencil centered at c, shifted to stay inside [lo, hi]. For a
  // shifted stencil the derivative is taken from the degree-4 interpolant on
  // the nodes c + {-2,-1,0,1,2} h, evaluated at t.
  double c = t;
  if (c - 2.0 * h < lo) c = lo + 2.0 * h;
  if (c + 2.0 * h > hi) c = hi - 2.0 * h;
  const double f1 = f(c - 2.0 * h), f2 = f(c - h), f3 = f(c), f4 = f(c + h),
               f5 = f(c + 2.0 * h);
  const double a1 = (f1 - 8.0 * f2 + 8.0 * f4 - f5) / 12.0;
  if (c == t) return a1 / h;
  const double u = (t - c) / h;
  const double a2 = (-f1 + 16.0 * f2 - 30.0 * f3 + 16.0 * f4 - f5) / 24.0;
  const double a3 = (-f1 + 2.0 * f2 - 2.0 * f4 + f5) / 12.0;
  const double a4 = (f1 - 4.0 * f2 + 6.0 * f3 - 4.0 * f4 + f5) / 24.0;
  return (a1 + 2.0 * a2 * u + 3.0 * a3 * u * u + 4.0 * a4 * u * u * u) / h;
}

double golden_minimize(const std::function<double(double)>& f, double a,
                       double b, double tol, int max_iter) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? x1 : x2;
}

namespace exec {

int max_threads() {
  if (const char* env = std::getenv("AESTH_CURVES_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 0) return v == 0 ? 1 : static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::min(hw == 0 ? 1u : hw, 4u));
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const int threads = std::min<std::size_t>(max_threads(), n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::atomic<std::size_t> next{0};
  for (int k = 0; k < threads; ++k) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
        fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace exec
}  // namespace aesth
