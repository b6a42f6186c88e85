#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "aesthcurves/io.hpp"

namespace {

// "a:b,c:d,..." into pairs; used for --grid and --intervals.
std::vector<std::pair<double, double>> parse_pairs(const std::string& spec) {
  std::vector<std::pair<double, double>> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto colon = tok.find(':');
    if (colon == std::string::npos)
      throw aesth::ValidationError("expected lo:hi pairs, got \"" + tok +
                                   "\"");
    try {
      out.emplace_back(std::stod(tok.substr(0, colon)),
                       std::stod(tok.substr(colon + 1)));
    } catch (const std::exception&) {
      throw aesth::ValidationError("cannot parse pair \"" + tok + "\"");
    }
  }
  if (out.empty()) throw aesth::ValidationError("empty pair list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Planar curve analysis: curvature tables, log-curvature histograms "
      "and graphs, and self-affinity verification"};
  app.set_version_flag("--version", "aesthcurves 1.0");
  app.require_subcommand(1);

  std::string input, config_path, output_dir = ".";
  int M = 10, rows = 257, samples = 128;
  long N = 120;
  double beta = 1.0, tol = 0.0;
  std::vector<double> eps, x_interval;
  std::string grid_spec, intervals_spec;
  bool strict = false, sampled_tols = false;
  std::uint64_t seed = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", input,
                    "curve file (.json analytic or sampled definition, any "
                    "other extension CSV with t,x,y columns), or inline JSON "
                    "starting with '{'");
    sub->add_option("--config", config_path,
                    "job config JSON file; explicit flags override it");
    sub->add_option("-o,--output-dir", output_dir,
                    "directory for the result files")
        ->capture_default_str();
    sub->add_option("--seed", seed, "seed for any randomized choices")
        ->capture_default_str();
    return sub;
  };
  auto add_rows = [&](CLI::App* sub) {
    sub->add_option("--rows", rows, "rows in the curve table")
        ->capture_default_str();
  };
  auto add_tol = [&](CLI::App* sub, const char* what) {
    sub->add_option("--tol", tol, what);
  };
  auto add_strict = [&](CLI::App* sub) {
    sub->add_flag("--strict", strict,
                  "exit with status 1 when the property does not hold");
  };
  auto add_classify_tols = [&](CLI::App* sub) {
    add_tol(sub, "classification tolerance (default depends on input kind)");
    sub->add_flag("--sampled-tols", sampled_tols,
                  "force the looser tolerances meant for sampled input");
  };

  CLI::App* c;
  c = common(app.add_subcommand(
      "generate", "sample a curve into a t,x,y,s,kappa,rho table and an "
                  "SVG trace"));
  add_rows(c);

  c = common(app.add_subcommand(
      "analyze", "generate plus a family classification"));
  add_rows(c);
  add_classify_tols(c);

  c = common(app.add_subcommand(
      "lch", "log-curvature histogram: M bins filled from N equal "
             "arc-length segments"));
  c->add_option("-M,--M", M, "number of histogram bins")
      ->capture_default_str();
  c->add_option("-N,--N", N, "number of arc-length segments")
      ->capture_default_str();

  c = common(app.add_subcommand(
      "lcg", "log-curvature graph with gradients, one trace per "
             "monotone-radius segment"));
  c->add_option("--samples", samples, "samples per monotone segment")
      ->capture_default_str();

  c = common(app.add_subcommand(
      "converge", "histogram vs graph errors over an (M, N) ladder"));
  c->add_option("--grid", grid_spec,
                "ladder as M:N pairs, e.g. 10:120,30:240,80:1000");
  c->add_option("--x-interval", x_interval,
                "log-radius interval for the measure comparison (two "
                "numbers; default drawn from the seed)")
      ->expected(2)
      ->delimiter(',');

  c = common(app.add_subcommand(
      "verify-msa", "test for a reparameterization under which parameter "
                    "shifts scale arc length and radius"));
  c->add_option("--eps", eps, "shift sizes to test")->delimiter(',');
  c->add_option("--beta", beta, "shift scale of the reparameterization")
      ->capture_default_str();
  add_tol(c, "residual tolerance (default 1e-6)");
  add_strict(c);

  c = common(app.add_subcommand(
      "verify-hsa", "test whether affine maps carry the whole curve onto "
                    "its subcurves (lines and parabolas)"));
  c->add_option("--intervals", intervals_spec,
                "target subcurves as domain fractions, e.g. 0:0.5,0.3:0.9");
  add_tol(c, "residual tolerance (default 1e-8)");
  add_strict(c);

  c = common(app.add_subcommand(
      "verify-esa", "test whether equiaffine-parameter shifts act by "
                    "affine maps (conics)"));
  c->add_option("--eps", eps, "shift sizes in the equiaffine parameter")
      ->delimiter(',');
  add_tol(c, "residual tolerance (default 1e-6)");
  add_strict(c);

  c = common(app.add_subcommand(
      "classify", "name the curve family with residual evidence"));
  add_classify_tols(c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    auto provided = [&](const char* flag) {
      const CLI::Option* o = sub->get_option_no_throw(flag);
      return o != nullptr && o->count() > 0;
    };

    aesth::JobConfig cfg;
    if (provided("--config")) cfg = aesth::parse_job_config(config_path);
    cfg.command = sub->get_name();
    if (provided("--input")) cfg.input = input;
    if (provided("--output-dir")) cfg.output_dir = output_dir;
    if (provided("--seed")) cfg.seed = seed;
    if (provided("--rows")) cfg.rows = rows;
    if (provided("--M")) cfg.M = M;
    if (provided("--N")) cfg.N = N;
    if (provided("--samples")) cfg.samples = samples;
    if (provided("--beta")) cfg.beta = beta;
    if (provided("--tol")) cfg.tol = tol;
    if (provided("--eps")) cfg.eps = eps;
    if (provided("--strict")) cfg.strict = strict;
    if (provided("--sampled-tols")) cfg.sampled_tols = sampled_tols;
    if (provided("--grid")) {
      cfg.grid.clear();
      for (auto [m, n] : parse_pairs(grid_spec)) {
        if (m != static_cast<long>(m) || n != static_cast<long>(n))
          throw aesth::ValidationError("--grid entries must be integers");
        cfg.grid.emplace_back(static_cast<int>(m), static_cast<long>(n));
      }
    }
    if (provided("--intervals")) {
      cfg.intervals.clear();
      for (auto [lo, hi] : parse_pairs(intervals_spec))
        cfg.intervals.push_back({lo, hi});
    }
    if (provided("--x-interval")) {
      cfg.x_lo = x_interval[0];
      cfg.x_hi = x_interval[1];
    }
    return aesth::run_job(cfg);
  } catch (const std::exception& e) {
    std::cerr << "aesthcurves: " << e.what() << '\n';
    return 2;
  }
}
