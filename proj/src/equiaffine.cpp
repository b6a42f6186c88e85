#include "aesthcurves/equiaffine.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "aesthcurves/numeric.hpp"

namespace aesth {

namespace {

constexpr int kKnotCells = 512;
constexpr int kInflectionScan = 512;

// det(gamma', gamma'') below this fraction of its maximum counts as a
// vanishing point.
constexpr double kDetFloor = 1e-9;

double det_d1d2(const Curve& c, double t) {
  return det2(c.derivative(t), c.second_derivative(t));
}

}  // namespace

EquiaffineCurve equiaffine_reparam(const Curve& c, double tol) {
  const Interval dom = c.domain();

  double max_abs = 0.0, min_abs = kInfinity;
  double sign = 0.0;
  bool flipped = false;
  for (int i = 0; i <= kInflectionScan; ++i) {
    const double t = dom.at_fraction(static_cast<double>(i) / kInflectionScan);
    const double d = det_d1d2(c, t);
    max_abs = std::max(max_abs, std::abs(d));
    min_abs = std::min(min_abs, std::abs(d));
    if (d != 0.0) {
      const double s = d > 0.0 ? 1.0 : -1.0;
      if (sign == 0.0)
        sign = s;
      else if (s != sign)
        flipped = true;
    }
  }
  if (max_abs == 0.0 || flipped || min_abs <= kDetFloor * max_abs)
    throw InflectionInDomain(
        "det(gamma', gamma'') vanishes on the domain; no equiaffine "
        "parameterization");

  EquiaffineCurve eq(c);
  eq.tol_ = tol;
  eq.sign_ = sign;

  const double cell_tol = tol / kKnotCells;
  eq.knot_t_.resize(kKnotCells + 1);
  eq.knot_sigma_.resize(kKnotCells + 1);
  for (int i = 0; i <= kKnotCells; ++i)
    eq.knot_t_[i] = dom.at_fraction(static_cast<double>(i) / kKnotCells);

  auto w = [&c](double t) { return std::cbrt(std::abs(det_d1d2(c, t))); };
  double acc = 0.0;
  eq.knot_sigma_[0] = 0.0;
  for (int i = 1; i <= kKnotCells; ++i) {
    acc += integrate(w, eq.knot_t_[i - 1], eq.knot_t_[i], cell_tol);
    eq.knot_sigma_[i] = acc;
  }
  eq.sigma_hi_ = acc;

  // The normalization is algebraic, so this only trips when the supplied
  // derivative callables are inconsistent with each other.
  for (int i = 0; i <= 16; ++i) {
    const double t = dom.at_fraction(i / 16.0);
    const EquiaffineCurve::Jet jet = eq.jet_at_t(t);
    if (std::abs(det2(jet.g1, jet.g2) - sign) > 1e-8)
      throw ValidationError(
          "equiaffine frame determinant check failed; derivatives are "
          "inconsistent");
  }
  return eq;
}

double EquiaffineCurve::density(double t) const {
  return std::cbrt(std::abs(det_d1d2(curve_, t)));
}

double EquiaffineCurve::sigma_of_t(double t) const {
  const Interval dom = curve_.domain();
  if (!dom.contains(t, 1e-9 * dom.length()))
    throw DomainViolation("parameter outside curve domain");
  t = dom.clamp(t);
  const auto it = std::upper_bound(knot_t_.begin(), knot_t_.end(), t);
  std::size_t k = static_cast<std::size_t>(it - knot_t_.begin());
  k = k == 0 ? 0 : k - 1;
  k = std::min(k, knot_t_.size() - 2);
  const double cell_tol = tol_ / kKnotCells;
  auto w = [this](double u) { return density(u); };
  if (t - knot_t_[k] <= knot_t_[k + 1] - t)
    return knot_sigma_[k] + integrate(w, knot_t_[k], t, cell_tol);
  return knot_sigma_[k + 1] - integrate(w, t, knot_t_[k + 1], cell_tol);
}

double EquiaffineCurve::t_of_sigma(double sigma) const {
  if (sigma < -1e-9 * sigma_hi_ || sigma > (1.0 + 1e-9) * sigma_hi_)
    throw DomainViolation("sigma outside equiaffine range");
  sigma = std::min(std::max(sigma, 0.0), sigma_hi_);
  const auto it =
      std::upper_bound(knot_sigma_.begin(), knot_sigma_.end(), sigma);
  std::size_t k = static_cast<std::size_t>(it - knot_sigma_.begin());
  k = k == 0 ? 0 : k - 1;
  k = std::min(k, knot_sigma_.size() - 2);
  if (sigma == knot_sigma_[k]) return knot_t_[k];
  return invert_monotone([this](double t) { return sigma_of_t(t); },
                         [this](double t) { return density(t); }, sigma,
                         knot_t_[k], knot_t_[k + 1]);
}

EquiaffineCurve::Jet EquiaffineCurve::jet_at_t(double t) const {
  const Vec2 g1 = curve_.derivative(t);
  const Vec2 g2 = curve_.second_derivative(t);
  const Vec2 g3 = curve_.third_derivative(t);
  const double D = det2(g1, g2);
  const double Dt = det2(g1, g3);

  // d2D/dt2 would need the fourth derivative; differencing the exact
  // expression for dD/dt avoids that, and stays exactly zero on conics,
  // where dD/dt vanishes identically.
  const Interval dom = curve_.domain();
  const double h = std::max(1e-4 * dom.length(), 4e-7 * (1.0 + std::abs(t)));
  const double Dtt = central_derivative(
      [this](double u) {
        return det2(curve_.derivative(u), curve_.third_derivative(u));
      },
      t, h, dom.lo, dom.hi);

  const double w = std::cbrt(std::abs(D));
  const double wt = w * Dt / (3.0 * D);
  const double wtt =
      (wt * Dt / D + w * Dtt / D - w * Dt * Dt / (D * D)) / 3.0;

  Jet jet;
  jet.g1 = g1 / w;
  jet.g2 = (g2 * w - g1 * wt) / (w * w * w);
  jet.g3 = ((g3 * w - g1 * wtt) * w - 3.0 * wt * (g2 * w - g1 * wt)) /
           (w * w * w * w * w);
  return jet;
}

Vec2 EquiaffineCurve::position(double sigma) const {
  return curve_.position(t_of_sigma(sigma));
}

Vec2 EquiaffineCurve::d_sigma(double sigma) const {
  return jet_at_t(t_of_sigma(sigma)).g1;
}

Vec2 EquiaffineCurve::d_sigma2(double sigma) const {
  return jet_at_t(t_of_sigma(sigma)).g2;
}

Vec2 EquiaffineCurve::d_sigma3(double sigma) const {
  return jet_at_t(t_of_sigma(sigma)).g3;
}

Mat2 EquiaffineCurve::frame(double sigma) const {
  const Jet jet = jet_at_t(t_of_sigma(sigma));
  Mat2 phi;
  phi.col(0) = jet.g1;
  phi.col(1) = sign_ * jet.g2;
  return phi;
}

double EquiaffineCurve::curvature(double sigma) const {
  const Jet jet = jet_at_t(t_of_sigma(sigma));
  return sign_ * det2(jet.g2, jet.g3);
}

double equiaffine_curvature(const EquiaffineCurve& c, double sigma) {
  return c.curvature(sigma);
}

namespace {

struct AffState {
  Vec2 g;
  Mat2 F;  // columns (dgamma/dsigma, d2gamma/dsigma2)
};

AffState rk4_step(double kappa, const AffState& q, double h) {
  auto f = [kappa](const AffState& s) {
    AffState d;
    d.g = s.F.col(0);
    d.F.col(0) = s.F.col(1);
    d.F.col(1) = -kappa * s.F.col(0);
    return d;
  };
  auto add = [](const AffState& s, const AffState& d, double w) {
    return AffState{s.g + w * d.g, s.F + w * d.F};
  };
  const AffState k1 = f(q);
  const AffState k2 = f(add(q, k1, 0.5 * h));
  const AffState k3 = f(add(q, k2, 0.5 * h));
  const AffState k4 = f(add(q, k3, h));
  AffState out;
  out.g = q.g + h / 6.0 * (k1.g + 2.0 * k2.g + 2.0 * k3.g + k4.g);
  out.F = q.F + h / 6.0 * (k1.F + 2.0 * k2.F + 2.0 * k3.F + k4.F);
  return out;
}

}  // namespace

Curve reconstruct_equiaffine(double kappa_sa, double sigma_all, int steps) {
  if (steps < 100)
    throw InvalidSteps("equiaffine reconstruction needs at least 100 steps");
  if (!(sigma_all > 0.0))
    throw ValidationError("total equiaffine length must be positive");

  struct Grid {
    double h, sigma_all, kappa;
    std::vector<AffState> states;
    AffState at(double sigma) const {
      sigma = std::min(std::max(sigma, 0.0), sigma_all);
      int k = static_cast<int>(std::floor(sigma / h));
      k = std::min(k, static_cast<int>(states.size()) - 2);
      k = std::max(k, 0);
      const double sigma0 = k * h;
      if (sigma == sigma0) return states[k];
      return rk4_step(kappa, states[k], sigma - sigma0);
    }
  };
  auto grid = std::make_shared<Grid>();
  grid->h = sigma_all / steps;
  grid->sigma_all = sigma_all;
  grid->kappa = kappa_sa;
  grid->states.reserve(steps + 1);
  AffState q{Vec2::Zero(), Mat2::Identity()};
  grid->states.push_back(q);
  for (int i = 0; i < steps; ++i) {
    q = rk4_step(kappa_sa, q, grid->h);
    grid->states.push_back(q);
  }

  return Curve(
      {0.0, sigma_all}, 0.0,
      [grid](double sigma) { return grid->at(sigma).g.eval(); },
      [grid](double sigma) { return grid->at(sigma).F.col(0).eval(); },
      [grid](double sigma) { return grid->at(sigma).F.col(1).eval(); },
      [grid, kappa_sa](double sigma) {
        return (-kappa_sa * grid->at(sigma).F.col(0)).eval();
      });
}

AffineMap equiaffine_self_map(const EquiaffineCurve& c, double sigma0,
                              double eps) {
  const Mat2 phi0 = c.frame(sigma0);
  const Mat2 phi1 = c.frame(sigma0 + eps);
  AffineMap map;
  map.A = phi1 * phi0.inverse();
  map.b = c.position(sigma0 + eps) - map.A * c.position(sigma0);
  return map;
}

AffineMap esa_witness(const std::string& family, double eps, double A,
                      double B) {
  AffineMap map;
  if (family == "parabola") {
    map.A << 1.0, 0.0, 2.0 * eps, 1.0;
    map.b = Vec2(eps, eps * eps);
    return map;
  }
  if (!(A > 0.0) || !(B > 0.0))
    throw InvalidParams("conic semi-axes must be positive");
  if (family == "ellipse") {
    const double c = std::cos(eps), s = std::sin(eps);
    map.A << c, -(A / B) * s, (B / A) * s, c;
    return map;
  }
  if (family == "hyperbola") {
    const double c = std::cosh(eps), s = std::sinh(eps);
    map.A << c, (A / B) * s, (B / A) * s, c;
    return map;
  }
  throw InvalidParams("unknown conic family: " + family);
}

EsaReport verify_esa(const Curve& c, const std::vector<double>& eps_list,
                     double tol) {
  EsaReport report;
  const EquiaffineCurve eq = equiaffine_reparam(c);

  const double diam = std::max(c.diameter(), 1e-300);
  const double unit = std::pow(diam, 4.0 / 3.0);
  const Interval range = eq.sigma_range();
  const double len = range.length();

  const int n = 64;
  double kappa[n];
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    kappa[i] = eq.curvature(range.at_fraction((i + 0.5) / n));
    sum += kappa[i];
  }
  const double mean = sum / n;
  double spread = 0.0;
  for (int i = 0; i < n; ++i)
    spread = std::max(spread, std::abs(kappa[i] - mean));
  report.kappa_sa = mean;
  report.kappa_sa_spread = spread;
  report.kappa_sa_normalized = mean * unit;
  report.spread_normalized = spread * unit;

  const bool constant =
      report.spread_normalized <=
      std::max(tol * std::abs(report.kappa_sa_normalized), tol);

  // Family by the sign of the mean, with a dead band wide enough that
  // measurement spread cannot flip a parabola into either curved family.
  // A curve whose curvature is not constant belongs to none of them.
  if (constant) {
    const double band = std::max(10.0 * report.spread_normalized, 1e-9);
    if (std::abs(report.kappa_sa_normalized) <= band)
      report.family = "parabola";
    else
      report.family =
          report.kappa_sa_normalized > 0.0 ? "ellipse" : "hyperbola";
  }

  // Shift set: clamp requested advances so anchor, pointwise grid, and the
  // overhang routes below all stay inside the domain; make sure there are at
  // least two distinct values to compare extensions against each other.
  std::vector<double> shifts;
  for (double e : eps_list) {
    if (!(e > 0.0)) throw ValidationError("eps values must be positive");
    shifts.push_back(std::min(std::max(e, 0.05 * len), 0.45 * len));
  }
  if (shifts.empty()) shifts = {0.15 * len, 0.30 * len};
  std::sort(shifts.begin(), shifts.end());
  shifts.erase(std::unique(shifts.begin(), shifts.end(),
                           [len](double a, double b) {
                             return std::abs(a - b) <= 1e-12 * len;
                           }),
               shifts.end());
  if (shifts.size() == 1) {
    const double e = shifts[0];
    shifts.push_back(e <= 0.225 * len ? 2.0 * e : 0.5 * e);
    std::sort(shifts.begin(), shifts.end());
  }
  report.shifts = shifts;

  const double anchor = 0.35 * len;
  std::vector<AffineMap> maps;
  double worst = 0.0;
  for (double e : shifts) {
    const AffineMap F =
        equiaffine_self_map(eq, std::min(anchor, len - e), e);
    maps.push_back(F);
    const double reach = len - e;
    for (int j = 0; j <= 16; ++j) {
      const double sigma = reach * j / 16.0;
      const Vec2 got = F(eq.position(sigma));
      const Vec2 want = eq.position(sigma + e);
      worst = std::max(worst, (got - want).norm() / diam);
    }
  }

  // Each map extends the curve past its endpoint (iterated when one step is
  // not enough); on a genuine conic every route lands on the same
  // supercurve point. Compare routes pairwise on a 10% overhang.
  double margin_worst = 0.0;
  for (int j = 1; j <= 8; ++j) {
    const double sigma_star = len + 0.1 * len * j / 8.0;
    std::vector<Vec2> candidates;
    for (std::size_t m = 0; m < shifts.size(); ++m) {
      const int k =
          static_cast<int>(std::ceil((sigma_star - len) / shifts[m] - 1e-12));
      Vec2 p = eq.position(sigma_star - k * shifts[m]);
      for (int i = 0; i < k; ++i) p = maps[m](p);
      candidates.push_back(p);
    }
    for (std::size_t a = 0; a < candidates.size(); ++a)
      for (std::size_t b = a + 1; b < candidates.size(); ++b)
        margin_worst = std::max(
            margin_worst, (candidates[a] - candidates[b]).norm() / diam);
  }
  report.margin_residual = margin_worst;
  report.witness_residual = std::max(worst, margin_worst);

  report.holds = constant && report.witness_residual <= tol;
  return report;
}

}  // namespace aesth
