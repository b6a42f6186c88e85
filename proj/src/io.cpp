#include "aesthcurves/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "aesthcurves/arc_length.hpp"
#include "aesthcurves/curvature.hpp"
#include "aesthcurves/families.hpp"
#include "aesthcurves/numeric.hpp"
#include "aesthcurves/svg.hpp"

namespace aesth {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr double kTau = 6.283185307179586;

[[noreturn]] void fail_parse(const std::string& origin,
                             const std::string& what) {
  throw ParseError(origin + ": " + what);
}

[[noreturn]] void fail_validate(const std::string& origin,
                                const std::string& what) {
  throw ValidationError(origin + ": " + what);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_parse(path, "cannot read file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// ---------------------------------------------------------------------------
// JSON field access with file / field context in every message.

double number_at(const json& j, const std::string& origin,
                 const std::string& field) {
  if (!j.is_number()) fail_parse(origin, field + ": expected a number");
  return j.get<double>();
}

Vec2 vec2_at(const json& j, const std::string& origin,
             const std::string& field) {
  if (!j.is_array() || j.size() != 2)
    fail_parse(origin, field + ": expected [x, y]");
  return {number_at(j[0], origin, field), number_at(j[1], origin, field)};
}

Interval interval_at(const json& j, const std::string& origin,
                     const std::string& field) {
  if (!j.is_array() || j.size() != 2)
    fail_parse(origin, field + ": expected [lo, hi]");
  Interval r{number_at(j[0], origin, field), number_at(j[1], origin, field)};
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || !(r.lo < r.hi))
    fail_validate(origin, field + ": needs finite lo < hi");
  return r;
}

AffineMap affine_at(const json& j, const std::string& origin) {
  if (!j.is_object()) fail_parse(origin, "affine: expected an object");
  if (!j.contains("A")) fail_parse(origin, "affine.A: required");
  const json& rows = j["A"];
  if (!rows.is_array() || rows.size() != 2)
    fail_parse(origin, "affine.A: expected two rows of two numbers");
  AffineMap m;
  for (int r = 0; r < 2; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || row.size() != 2)
      fail_parse(origin, "affine.A: expected two rows of two numbers");
    for (int c = 0; c < 2; ++c)
      m.A(r, c) = number_at(row[c], origin, "affine.A");
  }
  if (j.contains("b")) m.b = vec2_at(j["b"], origin, "affine.b");
  return m;
}

Curve samples_to_curve(std::vector<double> t, std::vector<double> x,
                       std::vector<double> y, const std::string& origin) {
  try {
    return from_samples(std::move(t), std::move(x), std::move(y));
  } catch (const Error& e) {
    fail_validate(origin, e.what());
  }
}

Curve build_sampled(const json& j, const std::string& origin) {
  auto array_at = [&](const char* field) {
    if (!j.contains(field))
      fail_parse(origin, std::string(field) + ": required for sampled kind");
    const json& a = j[field];
    if (!a.is_array())
      fail_parse(origin, std::string(field) + ": expected an array");
    std::vector<double> out;
    out.reserve(a.size());
    for (const auto& v : a) out.push_back(number_at(v, origin, field));
    return out;
  };
  return samples_to_curve(array_at("t"), array_at("x"), array_at("y"),
                          origin);
}

Curve build_analytic(const json& j, const std::string& origin) {
  if (!j.contains("name") || !j["name"].is_string())
    fail_parse(origin, "name: expected a string");
  const std::string name = j["name"].get<std::string>();

  json params = j.value("params", json::object());
  if (!params.is_object()) fail_parse(origin, "params: expected an object");
  auto param = [&](const char* field) {
    if (!params.contains(field))
      fail_parse(origin,
                 "params." + std::string(field) + ": required for " + name);
    return number_at(params[field], origin, "params." + std::string(field));
  };
  auto param_vec = [&](const char* field) {
    if (!params.contains(field))
      fail_parse(origin,
                 "params." + std::string(field) + ": required for " + name);
    return vec2_at(params[field], origin, "params." + std::string(field));
  };

  std::optional<Interval> domain;
  if (j.contains("domain")) domain = interval_at(j["domain"], origin, "domain");
  auto dom_or = [&](double lo, double hi) {
    return domain ? *domain : Interval{lo, hi};
  };
  auto dom_required = [&]() {
    if (!domain) fail_validate(origin, "domain: required for " + name);
    return *domain;
  };
  auto base_in = [&](const Interval& dom) {
    double base = dom.lo;
    if (j.contains("base_point"))
      base = number_at(j["base_point"], origin, "base_point");
    if (!(dom.lo <= base && base <= dom.hi))
      fail_validate(origin, "base_point: outside the domain");
    return base;
  };

  if (name == "circle") {
    Interval dom = dom_or(0.0, kTau);
    return curves::circle(param("r"), dom, base_in(dom));
  }
  if (name == "line") {
    Interval dom = dom_or(0.0, 1.0);
    return curves::line(param_vec("point"), param_vec("direction"), dom,
                        base_in(dom));
  }
  if (name == "parabola") {
    Interval dom = dom_required();
    return curves::parabola(param("a"), param("b"), dom, base_in(dom));
  }
  if (name == "ellipse") {
    Interval dom = dom_or(0.0, kTau);
    return curves::ellipse(param("A"), param("B"), dom, base_in(dom));
  }
  if (name == "hyperbola") {
    Interval dom = dom_required();
    return curves::hyperbola(param("A"), param("B"), dom, base_in(dom));
  }
  if (name == "log_spiral") {
    Interval dom = dom_required();
    return curves::log_spiral(param("a"), param("b"), dom, base_in(dom));
  }
  if (name == "clothoid") {
    Interval dom = dom_required();
    return curves::clothoid(param("a"), dom, base_in(dom));
  }
  if (name == "lac") {
    // The domain is the s-interval of the radius law; the generated curve
    // runs on [0, length] and keeps its own base point at 0.
    LacParams p;
    p.alpha = param("alpha");
    p.xi = param("xi");
    p.eta = param("eta");
    p.domain = dom_required();
    int steps = 10000;
    if (params.contains("steps")) {
      double raw = number_at(params["steps"], origin, "params.steps");
      if (raw != std::floor(raw) || raw < 2)
        fail_validate(origin, "params.steps: expected an integer >= 2");
      steps = static_cast<int>(raw);
    }
    return generate_lac(p, steps);
  }
  fail_parse(origin,
             "name: unknown family \"" + name +
                 "\" (expected circle, line, parabola, ellipse, hyperbola, "
                 "log_spiral, clothoid, or lac)");
}

Curve parse_curve_json(const json& j, const std::string& origin) {
  if (!j.is_object()) fail_parse(origin, "expected a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string())
    fail_parse(origin, "kind: expected \"analytic\" or \"sampled\"");
  const std::string kind = j["kind"].get<std::string>();

  std::optional<Curve> c;
  if (kind == "analytic")
    c = build_analytic(j, origin);
  else if (kind == "sampled")
    c = build_sampled(j, origin);
  else
    fail_parse(origin, "kind: unknown value \"" + kind + "\"");

  if (j.contains("affine")) c = apply_affine(*c, affine_at(j["affine"], origin));
  return *c;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(field);
      field.clear();
    } else if (ch != '\r') {
      field += ch;
    }
  }
  out.push_back(field);
  for (auto& f : out) {
    auto b = f.find_first_not_of(" \t");
    auto e = f.find_last_not_of(" \t");
    f = b == std::string::npos ? std::string() : f.substr(b, e - b + 1);
  }
  return out;
}

Curve parse_samples_csv(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) fail_parse(origin, "empty file");
  std::vector<std::string> header = split_csv_line(line);
  auto column = [&](const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
      fail_parse(origin, "header row must contain a \"" + name + "\" column");
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t it = column("t"), ix = column("x"), iy = column("y");

  std::vector<double> t, x, y;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != header.size())
      fail_parse(origin, "line " + std::to_string(lineno) + ": expected " +
                             std::to_string(header.size()) + " fields, got " +
                             std::to_string(fields.size()));
    auto value = [&](std::size_t idx) {
      const std::string& f = fields[idx];
      char* end = nullptr;
      double v = std::strtod(f.c_str(), &end);
      if (f.empty() || end != f.c_str() + f.size())
        fail_parse(origin, "line " + std::to_string(lineno) +
                               ": cannot parse \"" + f + "\" as a number");
      return v;
    };
    t.push_back(value(it));
    x.push_back(value(ix));
    y.push_back(value(iy));
  }
  return samples_to_curve(std::move(t), std::move(x), std::move(y), origin);
}

// ---------------------------------------------------------------------------
// Value formatting shared by every CSV writer.

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

Curve parse_curve_text(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail_parse(origin, std::string("invalid JSON: ") + e.what());
  }
  try {
    return parse_curve_json(j, origin);
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    // Geometry level complaints (degenerate family parameters, singular
    // affine blocks) become validation failures with file context.
    fail_validate(origin, e.what());
  }
}

Curve parse_curve_file(const std::string& path) {
  std::string text = read_file(path);
  if (ends_with(path, ".json")) return parse_curve_text(text, path);
  try {
    return parse_samples_csv(text, path);
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    fail_validate(path, e.what());
  }
}

void write_curve_csv(std::ostream& os, const Curve& c, int rows) {
  if (rows < 2) throw ValidationError("curve table needs at least 2 rows");
  ArcLengthCurve al = arc_length_reparam(c);
  os << "t,x,y,s,kappa,rho\n";
  for (int i = 0; i < rows; ++i) {
    double t = c.domain().at_fraction(static_cast<double>(i) / (rows - 1));
    Vec2 p = c.position(t);
    os << fmt(t) << ',' << fmt(p.x()) << ',' << fmt(p.y()) << ','
       << fmt(al.s_of_t(t)) << ',' << fmt(curvature(c, t)) << ','
       << fmt(curvature_radius(c, t)) << '\n';
  }
}

void write_lch_csv(std::ostream& os, const LCHistogram& h) {
  os << "M,N,bin_index,X_left,Y\n";
  for (std::size_t i = 0; i < h.bins.size(); ++i) {
    const LchBin& bin = h.bins[i];
    os << h.M << ',' << h.N << ',' << i << ',' << fmt(bin.x_left) << ',';
    if (bin.y)
      os << fmt(*bin.y);
    else
      os << "empty";
    os << '\n';
  }
}

void write_lcg_csv(std::ostream& os, const LcgPlot& plot) {
  os << "s,X,Y,grad\n";
  for (const LcgSegment& seg : plot.segments)
    for (const LcgSample& p : seg.samples)
      os << fmt(p.s) << ',' << fmt(p.x) << ',' << fmt(p.y) << ','
         << fmt(p.gradient) << '\n';
}

void write_convergence_csv(std::ostream& os, const ConvergenceReport& r) {
  os << "M,N,interval_error,tv_error\n";
  for (const ConvergenceEntry& e : r.entries)
    os << e.M << ',' << e.N << ',' << fmt(e.interval_error) << ','
       << fmt(e.tv_error) << '\n';
}

void write_msa_csv(std::ostream& os, const MsaReport& r) {
  os << "holds,mu,nu,beta,alpha,xi,eta,residual\n";
  os << bool_str(r.holds) << ',' << fmt(r.mu) << ',' << fmt(r.nu) << ','
     << fmt(r.beta) << ',';
  if (r.fitted)
    os << fmt(r.fitted->alpha) << ',' << fmt(r.fitted->xi) << ','
       << fmt(r.fitted->eta);
  else
    os << "nan,nan,nan";
  os << ',' << fmt(r.residual) << '\n';
}

void write_hsa_csv(std::ostream& os, const HsaReport& r) {
  os << "holds,classification,interval_lo,interval_hi,"
        "a11,a12,a21,a22,bx,by,residual\n";
  if (r.witnesses.empty()) {
    os << bool_str(r.holds) << ',' << r.classification
       << ",nan,nan,nan,nan,nan,nan,nan,nan," << fmt(r.max_residual) << '\n';
    return;
  }
  for (const HsaWitness& w : r.witnesses) {
    const Mat2& A = w.map.A;
    os << bool_str(r.holds) << ',' << r.classification << ','
       << fmt(w.interval.lo) << ',' << fmt(w.interval.hi) << ','
       << fmt(A(0, 0)) << ',' << fmt(A(0, 1)) << ',' << fmt(A(1, 0)) << ','
       << fmt(A(1, 1)) << ',' << fmt(w.map.b.x()) << ',' << fmt(w.map.b.y())
       << ',' << fmt(w.residual) << '\n';
  }
}

void write_esa_csv(std::ostream& os, const EsaReport& r) {
  os << "holds,family,kappa_sa,spread,witness_residual\n";
  os << bool_str(r.holds) << ',' << r.family << ',' << fmt(r.kappa_sa) << ','
     << fmt(r.kappa_sa_spread) << ',' << fmt(r.witness_residual) << '\n';
}

void write_classification_json(std::ostream& os, const Classification& c) {
  json out;
  out["family"] = c.family;
  out["residual"] = c.residual;
  out["fit_residual"] = c.fit_residual;
  out["esa_residual"] = c.esa_residual;
  json params = json::object();
  if (c.lac) {
    params["alpha"] = c.lac->alpha;
    params["xi"] = c.lac->xi;
    params["eta"] = c.lac->eta;
    params["domain"] = {c.lac->domain.lo, c.lac->domain.hi};
  } else if (c.family == "circle") {
    params["r"] = c.circle_radius;
  } else if (c.family == "parabola" || c.family == "ellipse" ||
             c.family == "hyperbola") {
    params["kappa_equiaffine"] = c.kappa_equiaffine;
  }
  out["params"] = params;
  os << out.dump(2) << '\n';
}

JobConfig parse_job_config(const std::string& path) {
  std::string text = read_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail_parse(path, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail_parse(path, "expected a JSON object");

  static const char* const known[] = {
      "command", "input",     "output_dir", "M",          "N",
      "rows",    "samples",   "beta",       "tol",        "eps",
      "grid",    "intervals", "x_interval", "strict",     "seed",
      "sampled_tols"};
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || item.key() == k;
    if (!ok) fail_parse(path, "unknown key \"" + item.key() + "\"");
  }

  auto str = [&](const char* key, std::string dflt) {
    if (!j.contains(key)) return dflt;
    if (!j[key].is_string())
      fail_parse(path, std::string(key) + ": expected a string");
    return j[key].get<std::string>();
  };
  auto num = [&](const char* key, double dflt) {
    if (!j.contains(key)) return dflt;
    return number_at(j[key], path, key);
  };
  auto integer = [&](const char* key, long dflt) {
    double v = num(key, static_cast<double>(dflt));
    if (v != std::floor(v))
      fail_parse(path, std::string(key) + ": expected an integer");
    return static_cast<long>(v);
  };
  auto flag = [&](const char* key, bool dflt) {
    if (!j.contains(key)) return dflt;
    if (!j[key].is_boolean())
      fail_parse(path, std::string(key) + ": expected true or false");
    return j[key].get<bool>();
  };

  JobConfig cfg;
  cfg.command = str("command", cfg.command);
  cfg.input = str("input", cfg.input);
  cfg.output_dir = str("output_dir", cfg.output_dir);
  cfg.M = static_cast<int>(integer("M", cfg.M));
  cfg.N = integer("N", cfg.N);
  cfg.rows = static_cast<int>(integer("rows", cfg.rows));
  cfg.samples = static_cast<int>(integer("samples", cfg.samples));
  cfg.beta = num("beta", cfg.beta);
  cfg.tol = num("tol", cfg.tol);
  cfg.strict = flag("strict", cfg.strict);
  cfg.sampled_tols = flag("sampled_tols", cfg.sampled_tols);
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() && !j["seed"].is_number_unsigned())
      fail_parse(path, "seed: expected an integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("eps")) {
    if (!j["eps"].is_array()) fail_parse(path, "eps: expected an array");
    for (const auto& v : j["eps"])
      cfg.eps.push_back(number_at(v, path, "eps"));
  }
  if (j.contains("grid")) {
    if (!j["grid"].is_array())
      fail_parse(path, "grid: expected an array of [M, N] pairs");
    for (const auto& v : j["grid"]) {
      if (!v.is_array() || v.size() != 2)
        fail_parse(path, "grid: expected an array of [M, N] pairs");
      double m = number_at(v[0], path, "grid"), n = number_at(v[1], path, "grid");
      if (m != std::floor(m) || n != std::floor(n))
        fail_parse(path, "grid: M and N must be integers");
      cfg.grid.emplace_back(static_cast<int>(m), static_cast<long>(n));
    }
  }
  if (j.contains("intervals")) {
    if (!j["intervals"].is_array())
      fail_parse(path, "intervals: expected an array of [lo, hi] pairs");
    for (const auto& v : j["intervals"])
      cfg.intervals.push_back(interval_at(v, path, "intervals"));
  }
  if (j.contains("x_interval")) {
    Interval r = interval_at(j["x_interval"], path, "x_interval");
    cfg.x_lo = r.lo;
    cfg.x_hi = r.hi;
  }
  return cfg;
}

void validate_job(const JobConfig& config) {
  static const char* const commands[] = {
      "generate",   "analyze",    "lch",        "lcg",     "converge",
      "verify-msa", "verify-hsa", "verify-esa", "classify"};
  bool known = false;
  for (const char* c : commands) known = known || config.command == c;
  if (!known)
    throw ValidationError("unknown command \"" + config.command + "\"");
  if (config.input.empty()) throw ValidationError("input: required");
  if (config.M < 2) throw ValidationError("M must be at least 2");
  if (config.N < config.M) throw ValidationError("N must be at least M");
  if (config.rows < 2) throw ValidationError("rows must be at least 2");
  if (config.samples < 1) throw ValidationError("samples must be at least 1");
  if (!std::isfinite(config.beta) || config.beta == 0.0)
    throw ValidationError("beta must be finite and nonzero");
  if (!std::isfinite(config.tol) || config.tol < 0.0)
    throw ValidationError("tol must be positive (0 selects the default)");
  for (double e : config.eps)
    if (!std::isfinite(e) || e <= 0.0)
      throw ValidationError("eps values must be positive");
  for (const auto& [m, n] : config.grid)
    if (m < 2 || n < m)
      throw ValidationError("grid entries need M >= 2 and N >= M");
  for (const Interval& iv : config.intervals)
    if (!(0.0 <= iv.lo && iv.lo < iv.hi && iv.hi <= 1.0))
      throw ValidationError("intervals must satisfy 0 <= lo < hi <= 1");
  bool lo_set = std::isfinite(config.x_lo), hi_set = std::isfinite(config.x_hi);
  if (lo_set != hi_set)
    throw ValidationError("x_interval: set both ends or neither");
  if (lo_set && !(config.x_lo < config.x_hi))
    throw ValidationError("x_interval: needs lo < hi");
}

namespace {

void write_text_file(const fs::path& p, const std::string& content) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw Error("cannot open " + p.string() + " for writing");
  os << content;
  os.flush();
  if (!os) throw Error("write failed: " + p.string());
}

ClassifyTols pick_tols(const JobConfig& config, const Curve& c) {
  ClassifyTols t = (config.sampled_tols || c.stencil_width() > 0.0)
                       ? ClassifyTols::sampled()
                       : ClassifyTols::analytic();
  if (config.tol > 0.0) t = {config.tol, config.tol};
  return t;
}

// X interval for the convergence ladder: the configured one, or a seeded
// subinterval of the observed log-radius range covering at least a fifth
// of it and staying away from the ends.
Interval converge_interval(const JobConfig& config, const ArcLengthCurve& al) {
  if (std::isfinite(config.x_lo)) return {config.x_lo, config.x_hi};
  double lo = kInfinity, hi = -kInfinity;
  const Interval sr = al.s_range();
  for (int i = 0; i <= 512; ++i) {
    double r = al.radius_abs(sr.at_fraction(i / 512.0));
    if (!(r > 0.0) || !std::isfinite(r)) continue;
    double X = std::log(r);
    lo = std::min(lo, X);
    hi = std::max(hi, X);
  }
  if (!(lo < hi))
    throw ValidationError("curve has no usable log-radius range");
  Interval xr{lo, hi};
  std::mt19937_64 eng(config.seed);
  double a = xr.at_fraction(0.10 + 0.30 * uniform01(eng));
  double b = xr.at_fraction(0.60 + 0.30 * uniform01(eng));
  return {a, b};
}

std::string render_text(const std::function<void(std::ostream&)>& writer) {
  std::ostringstream ss;
  writer(ss);
  return ss.str();
}

std::string render_svg(const std::vector<PlotSeries>& series,
                       const std::string& x_label, const std::string& y_label) {
  std::ostringstream ss;
  write_svg_plot(ss, series, x_label, y_label);
  return ss.str();
}

}  // namespace

int run_job(const JobConfig& config) {
  int rc = 0;
  try {
    validate_job(config);
    fs::path outdir =
        config.output_dir.empty() ? fs::path(".") : fs::path(config.output_dir);
    std::error_code ec;
    fs::create_directories(outdir, ec);
    if (ec)
      throw Error("cannot create output directory " + outdir.string() + ": " +
                  ec.message());
    auto save = [&](const char* name, const std::string& body) {
      write_text_file(outdir / name, body);
    };

    Curve curve = (!config.input.empty() && config.input.front() == '{')
                      ? parse_curve_text(config.input)
                      : parse_curve_file(config.input);
    const std::string& cmd = config.command;

    if (cmd == "generate" || cmd == "analyze") {
      save("curve.csv",
           render_text([&](std::ostream& os) {
             write_curve_csv(os, curve, config.rows);
           }));
      PlotSeries trace;
      for (int i = 0; i < config.rows; ++i)
        trace.points.push_back(curve.position(
            curve.domain().at_fraction(static_cast<double>(i) /
                                       (config.rows - 1))));
      save("curve.svg", render_svg({trace}, "x", "y"));
      if (cmd == "analyze") {
        Classification cls = classify_curve(curve, pick_tols(config, curve));
        save("classification.json", render_text([&](std::ostream& os) {
               write_classification_json(os, cls);
             }));
      }
    } else if (cmd == "lch") {
      ArcLengthCurve al = arc_length_reparam(curve);
      LCHistogram h = compute_lch(al, config.M, config.N);
      save("lch.csv",
           render_text([&](std::ostream& os) { write_lch_csv(os, h); }));
      // Staircase of the populated bins; gaps break the stroke.
      PlotSeries steps;
      const double nan = std::numeric_limits<double>::quiet_NaN();
      for (const LchBin& bin : h.bins) {
        if (bin.y) {
          steps.points.push_back({bin.x_left, *bin.y});
          steps.points.push_back({bin.x_left + h.bin_width(), *bin.y});
        } else {
          steps.points.push_back({nan, nan});
        }
      }
      save("lch.svg", render_svg({steps}, "X = log radius", "Y = log density"));
    } else if (cmd == "lcg") {
      ArcLengthCurve al = arc_length_reparam(curve);
      LcgPlot plot = compute_lcg(al, config.samples);
      save("lcg.csv",
           render_text([&](std::ostream& os) { write_lcg_csv(os, plot); }));
      std::vector<PlotSeries> series;
      for (const LcgSegment& seg : plot.segments) {
        PlotSeries s;
        for (const LcgSample& p : seg.samples) s.points.push_back({p.x, p.y});
        series.push_back(std::move(s));
      }
      save("lcg.svg",
           render_svg(series, "X = log radius", "Y = log ds/dX"));
    } else if (cmd == "converge") {
      ArcLengthCurve al = arc_length_reparam(curve);
      std::vector<std::pair<int, long>> grid = config.grid;
      if (grid.empty()) grid = {{10, 120}, {30, 240}, {80, 1000}};
      ConvergenceReport rep =
          convergence_report(al, grid, converge_interval(config, al));
      save("convergence.csv", render_text([&](std::ostream& os) {
             write_convergence_csv(os, rep);
           }));
      PlotSeries iv{"interval", {}}, tv{"TV", {}};
      for (std::size_t i = 0; i < rep.entries.size(); ++i) {
        iv.points.push_back(
            {double(i), std::log10(std::max(rep.entries[i].interval_error,
                                            1e-300))});
        tv.points.push_back(
            {double(i), std::log10(std::max(rep.entries[i].tv_error, 1e-300))});
      }
      save("convergence.svg",
           render_svg({iv, tv}, "grid index", "log10 error"));
    } else if (cmd == "verify-msa") {
      ArcLengthCurve al = arc_length_reparam(curve);
      std::vector<double> eps = config.eps;
      if (eps.empty()) eps = {0.25, 0.5, 1.0};
      double tol = config.tol > 0.0 ? config.tol : 1e-6;
      MsaReport rep = verify_msa(al, eps, config.beta, tol);
      save("msa.csv",
           render_text([&](std::ostream& os) { write_msa_csv(os, rep); }));
      if (config.strict && !rep.holds) rc = 1;
    } else if (cmd == "verify-hsa") {
      double tol = config.tol > 0.0 ? config.tol : 1e-8;
      HsaReport rep = verify_hsa(curve, config.intervals, tol);
      save("hsa.csv",
           render_text([&](std::ostream& os) { write_hsa_csv(os, rep); }));
      if (config.strict && !rep.holds) rc = 1;
    } else if (cmd == "verify-esa") {
      double tol = config.tol > 0.0 ? config.tol : 1e-6;
      EsaReport rep = verify_esa(curve, config.eps, tol);
      save("esa.csv",
           render_text([&](std::ostream& os) { write_esa_csv(os, rep); }));
      if (config.strict && !rep.holds) rc = 1;
    } else {  // classify
      Classification cls = classify_curve(curve, pick_tols(config, curve));
      save("classification.json", render_text([&](std::ostream& os) {
             write_classification_json(os, cls);
           }));
    }
  } catch (const std::exception& e) {
    std::cerr << "aesthcurves: " << e.what() << '\n';
    return 2;
  }
  return rc;
}

}  // namespace aesth
