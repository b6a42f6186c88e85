#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "aesthcurves/arc_length.hpp"
#include "aesthcurves/curvature.hpp"
#include "aesthcurves/curve.hpp"
#include "aesthcurves/families.hpp"
#include "aesthcurves/hsa.hpp"
#include "aesthcurves/numeric.hpp"

namespace {

using namespace aesth;

constexpr double kPi = 3.141592653589793;
// Fresnel integral values over [0, 1], frozen from adaptive quadrature.
constexpr double kFresnelC1 = 0.90452423790027208;
constexpr double kFresnelS1 = 0.31026830172338110;

// Arc length of (5t, t^2) from t = 0, in closed form.
double parabola_arc(double t) {
  return t * std::sqrt(25.0 + 4.0 * t * t) / 2.0 +
         6.25 * std::asinh(0.4 * t);
}

AffineMap make_map(double a11, double a12, double a21, double a22, double bx,
                   double by) {
  AffineMap m;
  m.A << a11, a12, a21, a22;
  m.b = Vec2(bx, by);
  return m;
}

}  // namespace

TEST_SUITE("curve_core") {

TEST_CASE("signed curvature and radius on reference curves") {
  Curve c2 = curves::circle(2.0);
  for (double t : {0.0, 1.0, 2.5, 6.0}) {
    CHECK(curvature(c2, t) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(curvature_radius(c2, t) == doctest::Approx(2.0).epsilon(1e-12));
  }

  // Mirroring the trace flips the bending direction and both signs.
  Curve mirrored = apply_affine(c2, make_map(1, 0, 0, -1, 0, 0));
  CHECK(curvature(mirrored, 1.0) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(curvature_radius(mirrored, 1.0) == doctest::Approx(-2.0).epsilon(1e-12));

  Curve fig = curves::parabola(5.0, 1.0, {0.0, 5.0}, 0.0);
  CHECK(curvature_radius(fig, 0.0) == doctest::Approx(12.5).epsilon(1e-14));
  // At parameter t the radius is (25 + 4t^2)^(3/2) / 10.
  CHECK(curvature_radius(fig, 2.0) ==
        doctest::Approx(std::pow(41.0, 1.5) / 10.0).epsilon(1e-13));

  Curve spiral = curves::log_spiral(1.0, 1.0, {0.0, 2.0}, 0.0);
  CHECK(curvature_radius(spiral, 0.0) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  Curve seg = curves::line(Vec2(1.0, 1.0), Vec2(3.0, -4.0));
  CHECK(curvature(seg, 0.5) == 0.0);
  CHECK(std::isinf(curvature_radius(seg, 0.5)));
}

TEST_CASE("arc length matches closed forms") {
  ArcLengthCurve circ = arc_length_reparam(curves::circle(1.0));
  CHECK(circ.s_of_t(1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(circ.s_of_t(5.5) == doctest::Approx(5.5).epsilon(1e-12));
  CHECK(circ.total_length() == doctest::Approx(2.0 * kPi).epsilon(1e-12));

  ArcLengthCurve seg = arc_length_reparam(
      curves::line(Vec2(0.0, 0.0), Vec2(2.0, 0.0)));
  CHECK(seg.s_of_t(1.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(seg.s_of_t(0.25) == doctest::Approx(0.5).epsilon(1e-14));

  ArcLengthCurve fig =
      arc_length_reparam(curves::parabola(5.0, 1.0, {0.0, 5.0}, 0.0));
  for (double t : {0.5, 1.0, 3.0, 5.0})
    CHECK(fig.s_of_t(t) == doctest::Approx(parabola_arc(t)).epsilon(1e-10));

  // Base point in the interior: s is signed, negative behind the base.
  ArcLengthCurve mid =
      arc_length_reparam(curves::parabola(5.0, 1.0, {0.0, 5.0}, 2.0));
  CHECK(mid.s_of_t(0.0) ==
        doctest::Approx(-parabola_arc(2.0)).epsilon(1e-10));
  CHECK(mid.s_range().lo < 0.0);
  CHECK(mid.s_range().hi > 0.0);
}

TEST_CASE("arc length parameterization is consistent") {
  // The clothoid family is unit speed already, so s is just t minus base.
  ArcLengthCurve cl =
      arc_length_reparam(curves::clothoid(1.0, {0.2, 1.2}, 0.2));
  for (double t : {0.2, 0.5, 0.9, 1.2})
    CHECK(cl.s_of_t(t) == doctest::Approx(t - 0.2).epsilon(1e-10));

  ArcLengthCurve fig =
      arc_length_reparam(curves::parabola(5.0, 1.0, {0.0, 5.0}, 0.0));
  for (int i = 0; i <= 16; ++i) {
    double t = 5.0 * i / 16.0;
    CHECK(fig.t_of_s(fig.s_of_t(t)) == doctest::Approx(t).epsilon(1e-10));
  }
  // Radius through the arc-length view equals the direct evaluation.
  const Curve& u = fig.underlying();
  double s = fig.s_of_t(3.0);
  CHECK(fig.radius(s) == doctest::Approx(curvature_radius(u, 3.0)).epsilon(1e-10));
}

TEST_CASE("curvature reconstruction round trips") {
  Curve flat = reconstruct_from_curvature([](double) { return 0.0; }, 3.0, 200);
  CHECK((flat.position(3.0) - Vec2(3.0, 0.0)).norm() < 1e-12);

  Curve loop =
      reconstruct_from_curvature([](double) { return 1.0; }, 2.0 * kPi, 10000);
  CHECK((loop.position(2.0 * kPi) - loop.position(0.0)).norm() < 1e-8);

  // kappa(s) = 2s integrates to the Fresnel spiral; its endpoint is the
  // pair of quadrature constants frozen above. Re-derive them here so the
  // frozen values are pinned by an independent integration path.
  CHECK(std::abs(integrate([](double u) { return std::cos(u * u); }, 0.0,
                           1.0) -
                 kFresnelC1) < 1e-12);
  CHECK(std::abs(integrate([](double u) { return std::sin(u * u); }, 0.0,
                           1.0) -
                 kFresnelS1) < 1e-12);
  Curve fresnel = reconstruct_from_curvature(
      [](double s) { return 2.0 * s; }, 1.0, 10000,
      [](double) { return 2.0; });
  CHECK((fresnel.position(1.0) - Vec2(kFresnelC1, kFresnelS1)).norm() < 1e-8);

  // The reconstruction carries exact derivative callables: measuring its
  // curvature recovers the input law.
  Curve wave = reconstruct_from_curvature(
      [](double s) { return 0.5 + 0.25 * std::cos(s); }, 4.0, 10000,
      [](double s) { return -0.25 * std::sin(s); });
  for (double s : {0.1, 1.3, 2.7, 3.9})
    CHECK(curvature(wave, s) ==
          doctest::Approx(0.5 + 0.25 * std::cos(s)).epsilon(1e-10));

  CHECK_THROWS_AS(reconstruct_from_curvature([](double) { return 1.0; }, 1.0, 50),
                  InvalidSteps);
}

TEST_CASE("affine maps transform radii by the covariance law") {
  Curve circ = curves::circle(1.0);
  Curve scaled = apply_affine(circ, make_map(3, 0, 0, 3, 1, -2));
  CHECK(curvature_radius(scaled, 0.7) == doctest::Approx(3.0).epsilon(1e-12));

  // Rigid motions leave the radius alone.
  double th = 0.83;
  Curve fig = curves::parabola(5.0, 1.0, {0.0, 5.0}, 0.0);
  Curve moved = apply_affine(
      fig, make_map(std::cos(th), -std::sin(th), std::sin(th), std::cos(th),
                    4.0, -1.0));
  for (double t : {0.3, 1.7, 4.2})
    CHECK(curvature_radius(moved, t) ==
          doctest::Approx(curvature_radius(fig, t)).epsilon(1e-12));

  // General maps scale it by |A gamma'|^3 / (|gamma'|^3 det A).
  std::mt19937_64 eng(4242);
  for (int k = 0; k < 5; ++k) {
    AffineMap m = make_map(uniform(eng, -2, 2), uniform(eng, -2, 2),
                           uniform(eng, -2, 2), uniform(eng, -2, 2),
                           uniform(eng, -1, 1), uniform(eng, -1, 1));
    double det = m.A.determinant();
    if (std::abs(det) < 0.1) continue;
    Curve img = apply_affine(fig, m);
    for (double t : {0.4, 2.1, 4.6}) {
      Vec2 tang = fig.derivative(t).normalized();
      double predicted =
          std::pow((m.A * tang).norm(), 3.0) * curvature_radius(fig, t) / det;
      CHECK(curvature_radius(img, t) ==
            doctest::Approx(predicted).epsilon(1e-9));
    }
  }
}

TEST_CASE("interval maps reproduce the subcurve pointwise") {
  Curve std_p = curves::parabola(1.0, 1.0, {0.0, 1.0}, 0.0);
  AffineMap m = parabola_subcurve_affine(0.0, 0.5);
  Curve img = apply_affine(std_p, m);
  for (int i = 0; i <= 50; ++i) {
    double t = static_cast<double>(i) / 50.0;
    CHECK((img.position(t) - std_p.position(0.5 * t)).norm() < 1e-14);
    CHECK(curvature_radius(img, t) ==
          doctest::Approx(curvature_radius(std_p, 0.5 * t)).epsilon(1e-9));
  }
}

TEST_CASE("winding screen accepts short tangent excursions only") {
  CHECK(winding_injectivity_check(curves::parabola(1.0, 1.0, {-1.0, 1.0}, -1.0)));
  CHECK_FALSE(winding_injectivity_check(curves::circle(1.0)));
  // Tangent angle of this clothoid sweeps [0, 4] radians, more than pi.
  CHECK_FALSE(winding_injectivity_check(curves::clothoid(1.0, {0.0, 2.0}, 0.0)));
  CHECK_THROWS_AS(winding_injectivity_check(curves::circle(1.0), 1),
                  ValidationError);
}

TEST_CASE("restriction preserves the trace") {
  Curve fig = curves::parabola(5.0, 1.0, {0.0, 5.0}, 0.0);
  Curve cut = restrict_to(fig, 0.5, 3.5);
  CHECK(cut.domain().lo == 0.5);
  CHECK(cut.domain().hi == 3.5);
  for (double t : {0.5, 1.0, 2.0, 3.5}) {
    CHECK((cut.position(t) - fig.position(t)).norm() == 0.0);
    CHECK(curvature_radius(cut, t) ==
          doctest::Approx(curvature_radius(fig, t)).epsilon(1e-13));
  }
}

TEST_CASE("degenerate parameterizations are rejected") {
  // Cusp: the derivative vanishes at t = 0, caught on construction.
  auto make_cusp = [] {
    return Curve(
        {-1.0, 1.0}, 0.0, [](double t) { return Vec2(t * t, t * t * t); },
        [](double t) { return Vec2(2.0 * t, 3.0 * t * t); },
        [](double t) { return Vec2(2.0, 6.0 * t); },
        [](double) { return Vec2(0.0, 6.0); });
  };
  CHECK_THROWS_AS(make_cusp(), DegenerateCurve);
}

TEST_CASE("sampled curves recover analytic curvature") {
  std::vector<double> ts, xs, ys;
  for (int i = 0; i <= 400; ++i) {
    double t = 2.0 * kPi * i / 400.0;
    ts.push_back(t);
    xs.push_back(3.0 * std::cos(t));
    ys.push_back(3.0 * std::sin(t));
  }
  Curve c = from_samples(ts, xs, ys);
  CHECK(c.stencil_width() > 0.0);
  for (int i = 0; i <= 20; ++i) {
    double t = c.domain().at_fraction((i + 0.5) / 21.0);
    CHECK(curvature(c, t) == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  }

  CHECK_THROWS_AS(from_samples({0.0, 1.0, 2.0}, {0.0, 1.0, 2.0},
                               {0.0, 0.0, 0.0}),
                  ValidationError);
  CHECK_THROWS_AS(from_samples({0.0, 1.0, 1.0, 2.0, 3.0},
                               {0.0, 1.0, 2.0, 3.0, 4.0},
                               {0.0, 0.0, 0.0, 0.0, 0.0}),
                  ValidationError);
}

}  // TEST_SUITE
