#include "aesthcurves/msa.hpp"

#include <algorithm>
#include <cmath>

namespace aesth {

MsaReparam msa_reparam(const LacParams& p, double beta) {
  if (beta == 0.0) throw ValidationError("shift rate beta must be nonzero");
  if (p.xi == 0.0) throw ValidationError("LAC scale xi must be nonzero");
  MsaReparam map;
  map.beta = beta;
  if (p.alpha == 0.0) {
    const double slope = p.xi / beta;
    map.mu = 1.0;
    map.s_of_t = [slope](double t) { return slope * t; };
    map.t_of_s = [slope](double s) { return s / slope; };
    return map;
  }
  if (p.eta == 0.0)
    throw ZeroEta("radius law is singular at s = 0; no shift map from there");
  const double c = p.eta / p.xi;
  map.mu = std::exp(beta);
  map.s_of_t = [c, beta](double t) { return c * std::expm1(beta * t); };
  map.t_of_s = [c, beta](double s) { return std::log1p(s / c) / beta; };
  return map;
}

MsaReparam msa_reparam_exponential(double C, double beta) {
  if (C == 0.0) throw ValidationError("scale C must be nonzero");
  if (beta == 0.0) throw ValidationError("shift rate beta must be nonzero");
  MsaReparam map;
  map.beta = beta;
  map.mu = std::exp(beta);
  map.s_of_t = [C, beta](double t) { return C * std::expm1(beta * t); };
  map.t_of_s = [C, beta](double s) { return std::log1p(s / C) / beta; };
  return map;
}

namespace {
constexpr int kFitSamples = 128;
constexpr int kGridPoints = 64;
}  // namespace

MsaReport verify_msa(const ArcLengthCurve& c, const std::vector<double>& eps,
                     double beta, double tol) {
  MsaReport report;
  report.beta = beta;

  const Interval srange = c.s_range();
  Eigen::ArrayXd s(kFitSamples), rho(kFitSamples);
  for (int k = 0; k < kFitSamples; ++k) {
    s[k] = srange.at_fraction((k + 0.5) / kFitSamples);
    rho[k] = c.radius_abs(s[k]);
  }

  const LacFit fit = fit_lac(s, rho, tol);
  report.fit_residual = fit.residual;
  report.branch = fit.kind;
  report.fitted = fit.params;
  report.circle_radius = fit.circle_radius;
  if (fit.kind == LacFit::Kind::none) {
    report.residual = fit.residual;
    return report;
  }
  if (fit.kind == LacFit::Kind::line) {
    // Straight lines carry the affinity for every (mu, nu).
    report.holds = fit.residual <= tol;
    report.residual = fit.residual;
    report.arbitrary_mu_nu = true;
    return report;
  }

  MsaReparam map;
  if (fit.kind == LacFit::Kind::circle) {
    // Any C works in principle; keep 1 + s/C positive over the measured
    // range so the inverse map stays defined.
    const double C =
        fit.circle_radius + 2.0 * std::max(0.0, -static_cast<double>(s[0]));
    map = msa_reparam_exponential(C, beta);
  } else {
    try {
      map = msa_reparam(*fit.params, beta);
    } catch (const ZeroEta&) {
      // Keep the verifier total: an exponential map still shifts s by
      // mu = e^beta; the radius identity then judges the curve.
      map = msa_reparam_exponential(1.0 / fit.params->xi, beta);
    }
  }
  report.mu = map.mu;

  // t-window whose s values, shifted by every eps, stay measurable.
  const double s_min = s[0];
  const double s_max = s[kFitSamples - 1];
  const double t_min = map.t_of_s(s_min);
  const double t_max = map.t_of_s(s_max);
  double eps_max = 0.0;
  std::vector<double> usable;
  for (double e : eps) {
    if (!(e > 0.0)) continue;
    if (t_max - e > t_min) {
      usable.push_back(e);
      eps_max = std::max(eps_max, e);
    }
  }
  if (usable.empty()) {
    report.residual = kInfinity;
    return report;
  }

  // Measure nu from the shifted radius ratios, then score the identity.
  double log_nu_sum = 0.0;
  long log_nu_count = 0;
  for (double e : usable) {
    for (int j = 0; j < kGridPoints; ++j) {
      const double t =
          t_min + (t_max - e - t_min) * (j + 0.5) / kGridPoints;
      const double r0 = c.radius_abs(map.s_of_t(t));
      const double r1 = c.radius_abs(map.s_of_t(t + e));
      if (r0 > 0.0 && std::isfinite(r0) && r1 > 0.0 && std::isfinite(r1)) {
        log_nu_sum += std::log(r1 / r0) / e;
        ++log_nu_count;
      }
    }
  }
  const double log_nu = log_nu_count > 0 ? log_nu_sum / log_nu_count : 0.0;
  report.nu = std::exp(log_nu);

  const double s_scale = std::max(std::abs(s_min), std::abs(s_max));
  double worst = 0.0;
  for (double e : usable) {
    for (int j = 0; j < kGridPoints; ++j) {
      const double t =
          t_min + (t_max - e - t_min) * (j + 0.5) / kGridPoints;
      const double shift_s = map.s_of_t(t + e) - map.s_of_t(e);
      const double scaled_s = std::pow(map.mu, e) * map.s_of_t(t);
      worst = std::max(worst, std::abs(shift_s - scaled_s) / s_scale);
      const double r0 = c.radius_abs(map.s_of_t(t));
      const double r1 = c.radius_abs(map.s_of_t(t + e));
      const double predicted = std::exp(log_nu * e) * r0;
      worst = std::max(worst, std::abs(r1 / predicted - 1.0));
    }
  }
  report.residual = worst;
  report.holds = worst <= tol && fit.residual <= tol;
  return report;
}

}  // namespace aesth
