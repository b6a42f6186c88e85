#include <doctest.h>

#include <Eigen/Core>
#include <cmath>

#include "aesthcurves/arc_length.hpp"
#include "aesthcurves/curvature.hpp"
#include "aesthcurves/families.hpp"
#include "aesthcurves/lac.hpp"
#include "aesthcurves/msa.hpp"

namespace {

using namespace aesth;

// Single clothoid quadrature reference point: integral of exp(i u^2) over
// [0, 1], validated against an independent series evaluation.
constexpr double kFresnelC1 = 0.90452423790027208;
constexpr double kFresnelS1 = 0.31026830172338110;

Mat2 rotation(double a) {
  Mat2 r;
  r << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
  return r;
}

}  // namespace

TEST_SUITE("lac_msa") {

TEST_CASE("radius law closed forms") {
  CHECK(lac_radius({1.0, 1.0, 2.0, {0.0, 4.0}}, 3.0) == doctest::Approx(5.0));
  CHECK(lac_radius({0.0, 1.0, 0.0, {0.0, 1.0}}, std::log(2.0)) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(lac_radius({-1.0, 2.0, 0.0, {0.1, 1.0}}, 0.25) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(lac_radius({2.0, 2.0, 3.0, {0.0, 4.0}}, 3.0) ==
        doctest::Approx(3.0).epsilon(1e-14));

  CHECK_THROWS_AS(lac_radius({1.0, 1.0, -2.0, {0.0, 4.0}}, 1.0),
                  DomainViolation);
  CHECK_THROWS_AS(lac_radius({2.0, 1.0, 0.0, {-2.0, 4.0}}, -1.0),
                  DomainViolation);
}

TEST_CASE("radius law derivative matches finite differences") {
  for (const LacParams& p :
       {LacParams{2.0, 2.0, 3.0, {0.0, 4.0}}, LacParams{0.0, 0.5, 0.2, {0.0, 3.0}},
        LacParams{-1.0, 2.0, 0.6, {0.0, 2.0}}}) {
    for (double f : {0.2, 0.5, 0.8}) {
      double s = p.domain.at_fraction(f);
      double h = 1e-5;
      double fd = (lac_radius(p, s + h) - lac_radius(p, s - h)) / (2.0 * h);
      CHECK(lac_radius_derivative(p, s) == doctest::Approx(fd).epsilon(1e-8));
    }
  }
  // Spot values: d/ds (2s+3)^(1/2) and d/ds e^(s/2).
  CHECK(lac_radius_derivative({2.0, 2.0, 3.0, {0.0, 4.0}}, 3.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(lac_radius_derivative({0.0, 0.5, 0.0, {0.0, 3.0}}, 2.0) ==
        doctest::Approx(0.5 * std::exp(1.0)).epsilon(1e-12));
}

TEST_CASE("generated law curve is the logarithmic spiral in disguise") {
  // rho(s) = s + sqrt(2) is the arc-length radius law of exp((1+i) t), so
  // the generated curve must agree with that spiral up to a rigid motion.
  double t_max = std::log(1.0 + 10.0 / std::sqrt(2.0));
  ArcLengthCurve spiral =
      arc_length_reparam(curves::log_spiral(1.0, 1.0, {0.0, t_max}, 0.0));
  Curve gen = generate_lac({1.0, 1.0, std::sqrt(2.0), {0.0, 10.0}});

  Vec2 u = spiral.underlying().derivative(0.0).normalized();
  Mat2 r;
  r << u.x(), -u.y(), u.y(), u.x();
  Vec2 b = spiral.position(0.0);

  double s_hi = std::min(10.0, spiral.s_range().hi);
  double worst = 0.0;
  for (int i = 0; i <= 50; ++i) {
    double s = s_hi * i / 50.0;
    worst = std::max(worst,
                     (r * gen.position(s) + b - spiral.position(s)).norm());
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("generated clothoid hits the quadrature reference point") {
  // alpha = -1, xi = 2, eta = 0 means kappa(s) = 2s, the unit clothoid.
  Curve gen = generate_lac({-1.0, 2.0, 0.0, {0.0, 1.0}});
  CHECK(gen.position(1.0).x() == doctest::Approx(kFresnelC1).epsilon(1e-7));
  CHECK(gen.position(1.0).y() == doctest::Approx(kFresnelS1).epsilon(1e-7));
}

TEST_CASE("large exponent limit flattens towards a circle") {
  double big = std::pow(2.0, 1000.0);
  LacParams p{1000.0, big, big, {0.0, 0.5}};
  // rho(s) = 2 (1 + s)^(1/1000), within a tenth of a percent of constant.
  for (double s : {0.0, 0.2, 0.5}) {
    double expect = 2.0 * std::pow(1.0 + s, 1e-3);
    CHECK(lac_radius(p, s) == doctest::Approx(expect).epsilon(1e-9));
    CHECK(std::abs(lac_radius(p, s) / 2.0 - 1.0) < 1e-3);
  }
  ArcLengthCurve al = arc_length_reparam(generate_lac(p));
  CHECK(std::abs(al.radius(0.4) / 2.0 - 1.0) < 1e-3);
}

TEST_CASE("shift map matches the exponential closed form") {
  MsaReparam r = msa_reparam({1.0, 1.0, 1.0, {0.0, 3.0}});
  CHECK(r.beta == 1.0);
  CHECK(r.mu == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
  for (double t : {0.0, 0.3, 1.0, 2.2}) {
    CHECK(r.s_of_t(t) ==
          doctest::Approx(std::exp(t) - 1.0).epsilon(1e-12));
    CHECK(r.t_of_s(r.s_of_t(t)) == doctest::Approx(t).epsilon(1e-10));
  }

  // alpha = 0 rescales linearly and shifts trivially.
  MsaReparam lin = msa_reparam({0.0, 0.5, 0.2, {0.0, 3.0}});
  CHECK(lin.mu == 1.0);
  CHECK(lin.s_of_t(1.8) == doctest::Approx(0.9).epsilon(1e-14));

  MsaReparam ex = msa_reparam_exponential(2.0, 2.0);
  CHECK(ex.mu == doctest::Approx(std::exp(2.0)).epsilon(1e-14));
  CHECK(ex.s_of_t(0.5) ==
        doctest::Approx(2.0 * (std::exp(1.0) - 1.0)).epsilon(1e-12));

  CHECK_THROWS_AS(msa_reparam({1.0, 1.0, 0.0, {0.0, 1.0}}), ZeroEta);
}

TEST_CASE("shift identity holds on the law curves") {
  ArcLengthCurve al =
      arc_length_reparam(generate_lac({2.0, 2.0, 3.0, {0.0, 4.0}}));
  MsaReport rep = verify_msa(al, {0.25, 0.5, 0.75});
  CHECK(rep.holds);
  CHECK(rep.branch == LacFit::Kind::lac);
  CHECK(rep.residual < 1e-9);
  REQUIRE(rep.fitted.has_value());
  CHECK(rep.fitted->alpha == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(std::abs(std::log(rep.nu) - std::log(rep.mu) / 2.0) < 1e-8);

  // alpha = 0: s scales, rho picks up the fixed factor e^(xi^2 / beta).
  ArcLengthCurve flat =
      arc_length_reparam(generate_lac({0.0, 0.5, 0.2, {0.0, 3.0}}));
  MsaReport rep0 = verify_msa(flat, {0.25, 0.5, 0.75});
  CHECK(rep0.holds);
  CHECK(rep0.mu == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep0.nu == doctest::Approx(std::exp(0.25)).epsilon(1e-9));
  REQUIRE(rep0.fitted.has_value());
  CHECK(std::abs(rep0.fitted->alpha) < 1e-8);

  // A spiral straight from the family, no generation step involved.
  ArcLengthCurve sp =
      arc_length_reparam(curves::log_spiral(2.0, 1.0, {0.0, 1.5}, 0.0));
  MsaReport rsp = verify_msa(sp, {0.2, 0.4});
  CHECK(rsp.holds);
  REQUIRE(rsp.fitted.has_value());
  CHECK(rsp.fitted->alpha == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(rsp.fitted->xi == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(rsp.fitted->eta == doctest::Approx(std::sqrt(5.0)).epsilon(1e-6));
}

TEST_CASE("shift identity degenerate branches") {
  ArcLengthCurve circ =
      arc_length_reparam(curves::circle(2.0, {0.0, 4.0}));
  MsaReport rep = verify_msa(circ, {0.25, 0.5});
  CHECK(rep.holds);
  CHECK(rep.branch == LacFit::Kind::circle);
  CHECK(rep.circle_radius == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(rep.mu == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
  CHECK(rep.nu == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(rep.arbitrary_mu_nu);

  ArcLengthCurve seg = arc_length_reparam(
      curves::line(Vec2(0.3, -1.0), Vec2(2.0, 1.0)));
  MsaReport rl = verify_msa(seg, {0.25});
  CHECK(rl.holds);
  CHECK(rl.branch == LacFit::Kind::line);
  CHECK(rl.arbitrary_mu_nu);
}

TEST_CASE("shift identity fails off the law family") {
  for (const Curve& c :
       {curves::ellipse(2.0, 1.0), curves::ellipse(2.0, 1.0, {0.2, 1.3}, 0.2),
        curves::hyperbola(1.5, 1.0, {-1.0, 1.5}, 0.0)}) {
    MsaReport rep = verify_msa(arc_length_reparam(c), {0.25, 0.5});
    CHECK_FALSE(rep.holds);
    CHECK(rep.fit_residual > 1e-3);
  }
}

TEST_CASE("radius samples fit back to the generating law") {
  Eigen::ArrayXd s = Eigen::ArrayXd::LinSpaced(200, 0.0, 4.0);
  LacFit fit = fit_lac(s, (2.0 * s + 3.0).sqrt());
  CHECK(fit.kind == LacFit::Kind::lac);
  REQUIRE(fit.params.has_value());
  CHECK(fit.params->alpha == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(fit.params->xi == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(fit.params->eta == doctest::Approx(3.0).epsilon(1e-5));

  LacFit circ = fit_lac(s, Eigen::ArrayXd::Constant(200, 5.0));
  CHECK(circ.kind == LacFit::Kind::circle);
  CHECK(circ.circle_radius == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(circ.residual < 1e-12);

  LacFit flat = fit_lac(s, Eigen::ArrayXd::Constant(200, kInfinity));
  CHECK(flat.kind == LacFit::Kind::line);

  Eigen::ArrayXd tiny = Eigen::ArrayXd::LinSpaced(3, 0.0, 1.0);
  CHECK_THROWS_AS(fit_lac(tiny, Eigen::ArrayXd::Constant(3, 1.0)),
                  InsufficientSamples);
}

TEST_CASE("spiral shift acts as a similarity of the plane") {
  // For exp((1+i) t), advancing t by eps multiplies positions by
  // e^eps R(eps); the affine image must land on the shifted curve exactly.
  Curve sp = curves::log_spiral(1.0, 1.0, {0.0, 2.0}, 0.0);
  double eps = 0.35;
  AffineMap m;
  m.A = std::exp(eps) * rotation(eps);
  m.b = Vec2(0.0, 0.0);
  Curve img = apply_affine(sp, m);
  for (int i = 0; i <= 30; ++i) {
    double t = (2.0 - eps) * i / 30.0;
    CHECK((img.position(t) - sp.position(t + eps)).norm() < 1e-12);
  }
}

}  // TEST_SUITE
