#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "aesthcurves/classify.hpp"
#include "aesthcurves/equiaffine.hpp"
#include "aesthcurves/hsa.hpp"
#include "aesthcurves/lcg.hpp"
#include "aesthcurves/lch.hpp"
#include "aesthcurves/msa.hpp"

namespace aesth {

/// Reads a curve definition from a file. `.json` files hold either an
/// analytic family,
///
///   {"kind": "analytic", "name": "circle", "params": {"r": 2},
///    "domain": [0, 6.2832], "base_point": 0}
///
/// or point samples ({"kind": "sampled", "t": [...], "x": [...],
/// "y": [...]}). Any other extension is read as CSV with a header row and at
/// least the columns t, x, y, extra columns ignored, so a table written by
/// write_curve_csv can be fed straight back in. An optional "affine" object
/// {"A": [[..,..],[..,..]], "b": [..,..]} maps the finished curve.
///
/// Structural problems (unreadable file, missing or mistyped fields) throw
/// ParseError; readable but inconsistent values (non increasing sample t,
/// empty domain, base point outside it) throw ValidationError. Messages
/// carry the file and field.
Curve parse_curve_file(const std::string& path);

/// Same, from JSON text already in memory. `origin` seeds error messages.
Curve parse_curve_text(const std::string& text,
                       const std::string& origin = "<inline>");

// Report writers. Each emits a header row and one record per line. Values
// are printed with up to 17 significant digits and LF endings, so a given
// report always serializes to the same bytes.

/// t,x,y,s,kappa,rho at `rows` parameter values uniform over the domain,
/// endpoints included. s is arc length measured from the base point; rho is
/// the signed curvature radius ("inf" at an inflection).
void write_curve_csv(std::ostream& os, const Curve& c, int rows);

/// M,N,bin_index,X_left,Y; empty bins print the literal "empty" for Y.
void write_lch_csv(std::ostream& os, const LCHistogram& h);

/// s,X,Y,grad over every monotone segment, in increasing s.
void write_lcg_csv(std::ostream& os, const LcgPlot& plot);

/// M,N,interval_error,tv_error, one row per grid entry.
void write_convergence_csv(std::ostream& os, const ConvergenceReport& r);

/// holds,mu,nu,beta,alpha,xi,eta,residual, one row. Branches that carry no
/// law parameters (circle, line) print "nan" for alpha, xi, eta.
void write_msa_csv(std::ostream& os, const MsaReport& r);

/// holds,classification,interval_lo,interval_hi,a11,a12,a21,a22,bx,by,
/// residual, one row per witness. A curve classified "neither" has no
/// witnesses and gets a single row with "nan" placeholders.
void write_hsa_csv(std::ostream& os, const HsaReport& r);

/// holds,family,kappa_sa,spread,witness_residual, one row of raw (not
/// diameter normalized) values.
void write_esa_csv(std::ostream& os, const EsaReport& r);

/// Classification as a pretty printed JSON object: family, winning residual,
/// the per stage residuals, and the winner's parameters.
void write_classification_json(std::ostream& os, const Classification& c);

/// One unit of command line work. Fields not meaningful for a command are
/// ignored by it; zero / empty marker values select per command defaults.
struct JobConfig {
  std::string command;  // generate | analyze | lch | lcg | converge |
                        // verify-msa | verify-hsa | verify-esa | classify
  std::string input;    // file path, or inline JSON when it starts with '{'
  std::string output_dir = ".";

  int M = 10;
  long N = 120;
  int rows = 257;     // generate/analyze table size
  int samples = 128;  // graph samples per monotone segment
  double beta = 1.0;
  double tol = 0.0;         // 0 picks the command default
  std::vector<double> eps;  // shift sizes; empty picks the command default
  std::vector<std::pair<int, long>> grid;  // converge ladder; empty = preset
  std::vector<Interval> intervals;  // verify-hsa domain fractions in [0, 1]
  double x_lo = kInfinity;   // converge X interval; left unset, one is
  double x_hi = -kInfinity;  // drawn from the seed
  bool strict = false;        // failed verification exits 1 instead of 0
  bool sampled_tols = false;  // force the sampled-input classify presets
  std::uint64_t seed = 0;
};

/// JobConfig from a JSON file; absent keys keep their defaults. The caller
/// overlays command line flags afterwards, so flags win over the file.
JobConfig parse_job_config(const std::string& path);

/// Cross-field invariants: known command, M >= 2, N >= M, positive
/// tolerances and shift sizes, grid entries ordered the same way, interval
/// fractions inside [0, 1]. Violations throw ValidationError.
void validate_job(const JobConfig& config);

/// Runs one job end to end: parse the input, run the command, write the CSV
/// (plus an SVG where the command defines a plot) into output_dir. Returns
/// 0 on success, 1 when a verification command reports holds = false and
/// `strict` is set, 2 on any thrown error (message on stderr).
int run_job(const JobConfig& config);

}  // namespace aesth
