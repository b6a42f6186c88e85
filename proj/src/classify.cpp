#include "aesthcurves/classify.hpp"

#include <algorithm>
#include <cmath>

#include "aesthcurves/arc_length.hpp"
#include "aesthcurves/equiaffine.hpp"

namespace aesth {

Classification classify_curve(const Curve& c, const ClassifyTols& tols) {
  Classification out;
  const double diam = std::max(c.diameter(), 1e-300);

  // Fit the radius laws on arc-length samples scaled to unit diameter, so
  // the fit works with O(1) numbers whatever the curve's size.
  const ArcLengthCurve alc = arc_length_reparam(c);
  const Interval sr = alc.s_range();
  const int n = 128;
  Eigen::ArrayXd s(n), rho(n);
  for (int i = 0; i < n; ++i) {
    const double si = sr.at_fraction((i + 0.5) / n);
    s[i] = si / diam;
    rho[i] = std::abs(alc.radius(si)) / diam;
  }
  const LacFit fit = fit_lac(s, rho, tols.fit);
  out.fit_residual = fit.residual;

  switch (fit.kind) {
    case LacFit::Kind::line:
      out.family = "line";
      out.residual = fit.residual;
      return out;
    case LacFit::Kind::circle:
      out.family = "circle";
      out.circle_radius = fit.circle_radius * diam;
      out.residual = fit.residual;
      return out;
    case LacFit::Kind::lac: {
      LacParams p = *fit.params;
      if (p.alpha == 0.0) {
        p.xi /= diam;
        p.eta += std::log(diam);
      } else {
        p.xi *= std::pow(diam, p.alpha) / diam;
        p.eta *= std::pow(diam, p.alpha);
      }
      p.domain = {p.domain.lo * diam, p.domain.hi * diam};
      out.family = "lac";
      out.lac = p;
      out.residual = fit.residual;
      return out;
    }
    case LacFit::Kind::none:
      break;
  }

  try {
    const EsaReport esa = verify_esa(c, {}, tols.esa);
    out.esa_residual = esa.spread_normalized;
    if (esa.holds) {
      out.family = esa.family;
      out.kappa_equiaffine = esa.kappa_sa_normalized;
      out.residual = std::max(esa.spread_normalized, esa.witness_residual);
      return out;
    }
  } catch (const InflectionInDomain&) {
    // No equiaffine parameterization; out of conic territory.
  }

  out.residual = std::min(out.fit_residual, out.esa_residual);
  return out;
}

}  // namespace aesth
