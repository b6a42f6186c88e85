#include "aesthcurves/lac.hpp"

#include <algorithm>
#include <cmath>

#include "aesthcurves/curvature.hpp"
#include "aesthcurves/numeric.hpp"

namespace aesth {

double lac_radius(const LacParams& p, double s) {
  if (p.xi == 0.0) throw ValidationError("LAC scale xi must be nonzero");
  if (p.alpha == 0.0) return std::exp(p.xi * s + p.eta);
  const double base = p.xi * s + p.eta;
  if (base < 0.0)
    throw DomainViolation("s outside the validity interval of the radius law");
  return std::pow(base, 1.0 / p.alpha);
}

double lac_radius_derivative(const LacParams& p, double s) {
  if (p.alpha == 0.0) return p.xi * std::exp(p.xi * s + p.eta);
  const double base = p.xi * s + p.eta;
  if (base < 0.0)
    throw DomainViolation("s outside the validity interval of the radius law");
  return (p.xi / p.alpha) * std::pow(base, 1.0 / p.alpha - 1.0);
}

Curve generate_lac(const LacParams& p, int steps) {
  const double s0 = p.domain.lo;
  const double len = p.domain.length();
  if (!(len > 0.0)) throw ValidationError("LAC domain is empty");
  // Probe both ends so invalid parameter combinations fail here, not mid
  // integration.
  lac_radius(p, p.domain.lo);
  lac_radius(p, p.domain.hi);
  auto kappa = [p, s0](double u) { return 1.0 / lac_radius(p, s0 + u); };
  auto kappa_prime = [p, s0](double u) {
    const double rho = lac_radius(p, s0 + u);
    return -lac_radius_derivative(p, s0 + u) / (rho * rho);
  };
  return reconstruct_from_curvature(kappa, len, steps, kappa_prime);
}

namespace {

struct BranchFit {
  double residual = kInfinity;
  LacParams params;
  double circle_radius = 0.0;
};

double max_rel_residual(const Eigen::ArrayXd& rho,
                        const Eigen::ArrayXd& fitted) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < rho.size(); ++i) {
    if (!std::isfinite(fitted[i]) || fitted[i] <= 0.0) return kInfinity;
    worst = std::max(worst, std::abs(fitted[i] / rho[i] - 1.0));
  }
  return worst;
}

// Given alpha, the law rho^alpha = xi s + eta is linear; regress and score.
BranchFit fit_power_given_alpha(const Eigen::ArrayXd& s,
                                const Eigen::ArrayXd& rho, double alpha) {
  BranchFit fit;
  Eigen::ArrayXd w(rho.size());
  for (Eigen::Index i = 0; i < rho.size(); ++i) {
    w[i] = std::pow(rho[i], alpha);
    if (!std::isfinite(w[i])) return fit;
  }
  const double sm = s.mean(), wm = w.mean();
  const double sxx = ((s - sm) * (s - sm)).sum();
  if (sxx == 0.0) return fit;
  const double xi = ((s - sm) * (w - wm)).sum() / sxx;
  const double eta = wm - xi * sm;
  if (xi == 0.0) return fit;
  Eigen::ArrayXd fitted(rho.size());
  for (Eigen::Index i = 0; i < rho.size(); ++i) {
    const double base = xi * s[i] + eta;
    fitted[i] = base > 0.0 ? std::pow(base, 1.0 / alpha)
                           : std::numeric_limits<double>::quiet_NaN();
  }
  fit.residual = max_rel_residual(rho, fitted);
  fit.params = {alpha, xi, eta, {s.minCoeff(), s.maxCoeff()}};
  return fit;
}

BranchFit fit_alpha_zero(const Eigen::ArrayXd& s, const Eigen::ArrayXd& rho) {
  BranchFit fit;
  const Eigen::ArrayXd logr = rho.log();
  const double sm = s.mean(), lm = logr.mean();
  const double sxx = ((s - sm) * (s - sm)).sum();
  if (sxx == 0.0) return fit;
  const double xi = ((s - sm) * (logr - lm)).sum() / sxx;
  const double eta = lm - xi * sm;
  if (xi == 0.0) return fit;
  Eigen::ArrayXd fitted = (xi * s + eta).exp();
  fit.residual = max_rel_residual(rho, fitted);
  fit.params = {0.0, xi, eta, {s.minCoeff(), s.maxCoeff()}};
  return fit;
}

// Initial slope guess: median of the per-point graph gradient
// 1 - rho rho'' / rho'^2 from second differences.
double alpha_estimate(const Eigen::ArrayXd& s, const Eigen::ArrayXd& rho) {
  std::vector<double> grads;
  for (Eigen::Index i = 1; i + 1 < s.size(); ++i) {
    const double h1 = s[i] - s[i - 1], h2 = s[i + 1] - s[i];
    const double d1 = (rho[i + 1] - rho[i - 1]) / (h1 + h2);
    const double d2 =
        2.0 * (h1 * rho[i + 1] - (h1 + h2) * rho[i] + h2 * rho[i - 1]) /
        (h1 * h2 * (h1 + h2));
    if (d1 == 0.0) continue;
    const double g = 1.0 - rho[i] * d2 / (d1 * d1);
    if (std::isfinite(g)) grads.push_back(g);
  }
  if (grads.empty()) return 1.0;
  std::nth_element(grads.begin(), grads.begin() + grads.size() / 2,
                   grads.end());
  return grads[grads.size() / 2];
}

}  // namespace

LacFit fit_lac(const Eigen::ArrayXd& s, const Eigen::ArrayXd& rho,
               double tol) {
  if (s.size() < 8)
    throw InsufficientSamples("LAC fit needs at least 8 samples");
  if (rho.size() != s.size())
    throw ValidationError("sample arrays differ in length");
  double s_prev = -kInfinity;
  bool all_finite = true;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (!(s[i] > s_prev))
      throw ValidationError("sample s values must strictly increase");
    s_prev = s[i];
    if (!(rho[i] > 0.0))
      throw ValidationError("sample rho values must be positive");
    if (std::isinf(rho[i])) all_finite = false;
  }
  const double s_span = s[s.size() - 1] - s[0];

  // Line branch: rho uniformly enormous against the arc span.
  double line_residual = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    line_residual = std::max(line_residual, std::abs(s_span / rho[i]));

  BranchFit circle, alpha0, power;
  if (all_finite) {
    // Circle branch: constant rho.
    const double mean = rho.mean();
    circle.circle_radius = mean;
    circle.residual = max_rel_residual(
        rho, Eigen::ArrayXd::Constant(rho.size(), mean));

    alpha0 = fit_alpha_zero(s, rho);

    // Power branch: coarse alpha scan around the gradient estimate, then a
    // golden-section polish of the best bracket.
    const double a_hat = alpha_estimate(s, rho);
    std::vector<double> seeds;
    for (double a = -8.0; a <= 8.0; a += 0.25)
      if (std::abs(a) > 0.05) seeds.push_back(a);
    for (double a : {a_hat, 0.5 * a_hat, 2.0 * a_hat})
      if (std::isfinite(a) && std::abs(a) > 0.02 && std::abs(a) < 32.0)
        seeds.push_back(a);
    double best_seed = 1.0, best_res = kInfinity;
    for (double a : seeds) {
      const BranchFit f = fit_power_given_alpha(s, rho, a);
      if (f.residual < best_res) {
        best_res = f.residual;
        best_seed = a;
      }
    }
    const double w = std::max(0.3, 0.2 * std::abs(best_seed));
    double lo = best_seed - w, hi = best_seed + w;
    if (lo < 0.0 && hi > 0.0) {
      // Keep the bracket on one side of the excluded alpha = 0.
      if (best_seed >= 0.0)
        lo = 0.02;
      else
        hi = -0.02;
    }
    const double alpha = golden_minimize(
        [&](double a) { return fit_power_given_alpha(s, rho, a).residual; },
        lo, hi, 1e-12);
    power = fit_power_given_alpha(s, rho, alpha);
    if (best_res < power.residual) power = fit_power_given_alpha(s, rho, best_seed);
  }

  // Selection: candidates under tol, ranked by residual; the winner must
  // beat the runner-up by 2x or lose the tie to the more degenerate branch
  // (line, then circle, then the exponential law, then the power law).
  struct Entry {
    LacFit::Kind kind;
    double residual;
    const BranchFit* fit;
  };
  const Entry entries[] = {
      {LacFit::Kind::line, line_residual, nullptr},
      {LacFit::Kind::circle, circle.residual, &circle},
      {LacFit::Kind::lac, alpha0.residual, &alpha0},
      {LacFit::Kind::lac, power.residual, &power},
  };

  LacFit out;
  double best_any = kInfinity;
  for (const Entry& e : entries) best_any = std::min(best_any, e.residual);
  out.residual = best_any;

  std::vector<const Entry*> candidates;
  for (const Entry& e : entries)
    if (e.residual < tol) candidates.push_back(&e);
  if (candidates.empty()) return out;

  const Entry* winner = candidates.front();
  for (const Entry* e : candidates)
    if (e->residual < winner->residual) winner = e;
  for (const Entry* e : candidates) {
    if (e == winner) continue;
    if (e->residual <= 2.0 * winner->residual) {
      // Not decisive; first entry in declaration order wins the tie.
      for (const Entry& first : entries) {
        if (first.residual < tol &&
            first.residual <= 2.0 * winner->residual) {
          winner = &first;
          break;
        }
      }
      break;
    }
  }

  out.kind = winner->kind;
  out.residual = winner->residual;
  if (winner->fit) {
    if (winner->kind == LacFit::Kind::lac) out.params = winner->fit->params;
    if (winner->kind == LacFit::Kind::circle)
      out.circle_radius = winner->fit->circle_radius;
  }
  return out;
}

}  // namespace aesth
