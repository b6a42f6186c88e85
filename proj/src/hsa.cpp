#include "aesthcurves/hsa.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "aesthcurves/curvature.hpp"
#include "aesthcurves/equiaffine.hpp"

namespace aesth {

namespace {

// Map of the standard parabola sending the arc over [u0, u1] onto the arc
// over [v0, v1], written through the parameter change p -> lambda p + c.
AffineMap standard_interval_map(double u0, double u1, double v0, double v1) {
  const double lambda = (v1 - v0) / (u1 - u0);
  const double c = v0 - lambda * u0;
  AffineMap map;
  map.A << lambda, 0.0, 2.0 * lambda * c, lambda * lambda;
  map.b = Vec2(c, c * c);
  return map;
}

}  // namespace

AffineMap parabola_subcurve_affine(double t0, double t1) {
  if (!(t1 > t0))
    throw EmptyInterval("subcurve interval must have positive length");
  return standard_interval_map(0.0, 1.0, t0, t1);
}

ArcParallelogram bounding_parallelogram(double a, double b) {
  if (!(b > a)) throw EmptyInterval("arc interval must have positive length");
  ArcParallelogram par;
  par.anchor = Vec2(a, a * a);
  par.v1 = Vec2(b - a, 2.0 * a * b);
  const double sum = a + b;
  par.v2 = Vec2(0.0, sum * sum);
  par.degenerate =
      std::abs(sum) <= 1e-12 * std::max({std::abs(a), std::abs(b), 1.0});
  if (par.degenerate) return par;

  // With x = (t - a)/(b - a) the second coordinate is
  // w(x) = x (x (b-a)^2 - 2 a^2) / (a+b)^2, a quadratic whose range over
  // [0, 1] is spanned by the endpoints and the interior vertex.
  const double len2 = (b - a) * (b - a);
  auto w_of = [&](double x) {
    return x * (x * len2 - 2.0 * a * a) / (sum * sum);
  };
  par.w_min = std::min(w_of(0.0), w_of(1.0));
  par.w_max = std::max(w_of(0.0), w_of(1.0));
  const double xv = a * a / len2;
  if (xv > 0.0 && xv < 1.0) {
    par.w_min = std::min(par.w_min, w_of(xv));
    par.w_max = std::max(par.w_max, w_of(xv));
  }
  par.contains_arc =
      std::max(std::abs(par.w_min), std::abs(par.w_max)) <= 1.0 + 1e-12;
  return par;
}

namespace {

constexpr int kCurvatureScan = 128;
constexpr int kWitnessGrid = 24;

bool map_is_singular(const AffineMap& map) {
  const double d = map.det();
  return !std::isfinite(d) || d == 0.0;
}

// Witness for a straight trace: scale about gamma(t_lo) onto the subsegment.
// An affine map restricted to a line preserves ratios of lengths, which
// gives the exact point correspondence no matter how the line is
// parameterized.
HsaWitness line_witness(const Curve& c, const Interval& part) {
  const Interval dom = c.domain();
  const Vec2 p0 = c.position(dom.lo);
  const Vec2 p1 = c.position(dom.hi);
  const Vec2 q0 = c.position(part.lo);
  const Vec2 q1 = c.position(part.hi);
  const double whole = (p1 - p0).norm();
  const double lambda = (q1 - q0).norm() / whole;

  HsaWitness wit;
  wit.interval = part;
  wit.map.A = lambda * Mat2::Identity();
  wit.map.b = q0 - lambda * p0;

  const double diam = std::max(c.diameter(), 1e-300);
  double worst = 0.0;
  for (int j = 0; j <= kWitnessGrid; ++j) {
    const double t = dom.at_fraction(static_cast<double>(j) / kWitnessGrid);
    const Vec2 p = c.position(t);
    const Vec2 want = q0 + (q1 - q0) * ((p - p0).norm() / whole);
    worst = std::max(worst, (wit.map(p) - want).norm() / diam);
  }
  wit.residual = worst;
  return wit;
}

}  // namespace

HsaReport verify_hsa(const Curve& c, const std::vector<Interval>& intervals,
                     double tol) {
  HsaReport report;
  const double diam = std::max(c.diameter(), 1e-300);
  const Interval dom = c.domain();

  std::vector<Interval> parts = intervals;
  if (parts.empty()) parts = {{0.0, 0.5}, {0.3, 0.9}};
  for (const Interval& p : parts)
    if (!(p.lo >= 0.0 && p.lo < p.hi && p.hi <= 1.0))
      throw ValidationError(
          "witness intervals must be fractions with 0 <= lo < hi <= 1");

  // Curves whose tangent turns by pi or more cannot be a line segment or a
  // parabola arc, and the later point correspondences assume they are not.
  if (!winding_injectivity_check(c)) return report;

  double kappa_worst = 0.0;
  for (int i = 0; i <= kCurvatureScan; ++i) {
    const double t = dom.at_fraction(static_cast<double>(i) / kCurvatureScan);
    kappa_worst = std::max(kappa_worst, std::abs(curvature(c, t)) * diam);
  }
  if (kappa_worst <= tol) {
    report.classification = "line";
    report.curvature_residual = kappa_worst;
    double worst = 0.0;
    bool singular = false;
    for (const Interval& p : parts) {
      HsaWitness wit = line_witness(
          c, {dom.at_fraction(p.lo), dom.at_fraction(p.hi)});
      singular = singular || map_is_singular(wit.map);
      worst = std::max(worst, wit.residual);
      report.witnesses.push_back(std::move(wit));
    }
    report.max_residual = worst;
    report.holds = !singular && worst <= tol;
    return report;
  }

  std::unique_ptr<EquiaffineCurve> eq;
  try {
    eq = std::make_unique<EquiaffineCurve>(equiaffine_reparam(c));
  } catch (const InflectionInDomain&) {
    return report;  // neither straight nor uniformly convex
  }

  const double unit = std::pow(diam, 4.0 / 3.0);
  const Interval range = eq->sigma_range();
  double sa_worst = 0.0;
  for (int i = 0; i < 64; ++i) {
    const double sigma = range.at_fraction((i + 0.5) / 64.0);
    sa_worst = std::max(sa_worst, std::abs(eq->curvature(sigma)) * unit);
  }
  report.curvature_residual = sa_worst;
  if (sa_worst > tol) return report;

  report.classification = "parabola";

  // In its own equiaffine parameter a parabola is exactly quadratic:
  // gamma(sigma) = c0 + c1 sigma + c2 sigma^2. That identifies the affine
  // change of coordinates H from the standard parabola (sigma, sigma^2), and
  // whole-to-subcurve maps are standard-position maps conjugated by H.
  const int m = 64;
  Eigen::MatrixXd basis(m + 1, 3);
  Eigen::MatrixXd points(m + 1, 2);
  for (int j = 0; j <= m; ++j) {
    const double sigma = range.at_fraction(static_cast<double>(j) / m);
    basis(j, 0) = 1.0;
    basis(j, 1) = sigma;
    basis(j, 2) = sigma * sigma;
    const Vec2 p = eq->position(sigma);
    points(j, 0) = p.x();
    points(j, 1) = p.y();
  }
  const Eigen::MatrixXd coef = basis.colPivHouseholderQr().solve(points);
  const double fit_residual =
      (basis * coef - points).cwiseAbs().maxCoeff() / diam;

  AffineMap H;
  H.A << coef(1, 0), coef(2, 0), coef(1, 1), coef(2, 1);
  H.b = Vec2(coef(0, 0), coef(0, 1));
  const double col_scale = H.A.col(0).norm() * H.A.col(1).norm();
  if (!(std::abs(H.A.determinant()) > 1e-6 * col_scale)) {
    report.classification = "neither";
    return report;
  }
  const AffineMap H_inv = H.inverse();

  const double L = range.length();
  double worst = fit_residual;
  bool singular = false;
  for (const Interval& p : parts) {
    const double s0 = eq->sigma_of_t(dom.at_fraction(p.lo));
    const double s1 = eq->sigma_of_t(dom.at_fraction(p.hi));
    const double lambda = (s1 - s0) / L;
    HsaWitness wit;
    wit.interval = {dom.at_fraction(p.lo), dom.at_fraction(p.hi)};
    wit.map = H * standard_interval_map(0.0, L, s0, s1) * H_inv;
    singular = singular || map_is_singular(wit.map);
    double res = 0.0;
    for (int j = 0; j <= kWitnessGrid; ++j) {
      const double sigma = L * j / kWitnessGrid;
      const Vec2 got = wit.map(eq->position(sigma));
      const Vec2 want = eq->position(lambda * sigma + s0);
      res = std::max(res, (got - want).norm() / diam);
    }
    wit.residual = res;
    worst = std::max(worst, res);
    report.witnesses.push_back(std::move(wit));
  }
  report.max_residual = worst;
  report.holds = !singular && worst <= tol;
  return report;
}

}  // namespace aesth
