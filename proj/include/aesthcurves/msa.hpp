#pragma once

#include <functional>
#include <vector>

#include "aesthcurves/lac.hpp"

namespace aesth {

/// Reparameterization s(t) under which an arc-length shift by eps acts on
/// (s, rho) as the pure scaling (mu^eps s, nu^eps rho). s(0) = 0 always.
struct MsaReparam {
  double beta = 1.0;
  double mu = 1.0;  // scale of s per unit shift, exact by construction
  std::function<double(double)> s_of_t;
  std::function<double(double)> t_of_s;
};

/// The map matched to a radius law: s(t) = (eta/xi)(e^(beta t) - 1) for
/// alpha != 0, and the linear map s(t) = (xi/beta) t for alpha = 0 (any
/// linear map shifts trivially, mu = 1). Throws ZeroEta for alpha != 0 with
/// eta = 0: the law's singular point is the arc-length origin and no shift
/// map with s(0) = 0 exists.
MsaReparam msa_reparam(const LacParams& p, double beta = 1.0);

/// Constant-radius curves scale in s alone: s(t) = C (e^(beta t) - 1) for
/// any C != 0.
MsaReparam msa_reparam_exponential(double C, double beta = 1.0);

struct MsaReport {
  bool holds = false;
  double mu = 1.0;
  double nu = 1.0;  // measured from the shifted radius ratios
  double beta = 1.0;
  /// Max deviation of the shift identity over the (t, eps) grid when a
  /// branch fit succeeded, otherwise the best fit residual.
  double residual = kInfinity;
  double fit_residual = kInfinity;
  LacFit::Kind branch = LacFit::Kind::none;
  std::optional<LacParams> fitted;
  double circle_radius = 0.0;
  bool arbitrary_mu_nu = false;  // lines admit every (mu, nu)
};

/// Fits the measured (s, |rho|) data to the radius-law family, builds the
/// matching reparameterization, and checks the shift identity on a 64-point
/// t-grid for every eps. Failure is reported through `holds`; the call
/// itself does not throw on geometric grounds.
MsaReport verify_msa(const ArcLengthCurve& c, const std::vector<double>& eps,
                     double beta = 1.0, double tol = 1e-6);

}  // namespace aesth
