// Command-line front end: parse a job specification, dispatch to the library,
// and emit machine-readable reports (deterministic JSON, fixed-column CSV, or
// gnuplot-style plotdata blocks).
#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lamspec/core.hpp"
#include "lamspec/homogenisation.hpp"
#include "lamspec/multi_dim.hpp"
#include "lamspec/one_dim.hpp"
#include "lamspec/oracle.hpp"
#include "lamspec/profile.hpp"
#include "lamspec/report.hpp"

namespace lamspec::cli {

struct JobSpec {
  std::string command;
  std::vector<double> alpha;
  int dim = 2;
  int k_max = 6;
  double bound_A = 0;  // <= 0 selects 1 + 1.5 max|alpha_j|
  double gamma = 1.0;
  std::string format = "json";  // json | csv | plotdata
  std::string oracle_kind = "fd";
  int grid_n = 240;
  int modes_M = 12;
  int eig_count = 5;
  std::vector<double> beta;
  std::vector<double> lambda_seq;  // user-supplied cross-section eigenvalues
  std::vector<double> delta_grid;
  double s_resolution = 0;
  std::string dump_path;
  Tolerances tol = Tolerances::defaults();
};

struct RunResult {
  std::string output;
  int exit_code = 0;
};

namespace detail {

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) out += ',';
      out += header[i];
    }
    out += '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out += ',';
        if (i < row.size()) out += row[i];
      }
      out += '\n';
    }
    return out;
  }
};

struct PlotData {
  struct Family {
    std::string label;
    std::vector<std::pair<double, double>> points;
  };
  std::vector<Family> families;

  std::string str() const {
    std::string out;
    bool first = true;
    for (const auto& f : families) {
      if (!first) out += '\n';
      first = false;
      out += "# " + f.label + "\n";
      for (const auto& [x, y] : f.points)
        out += fmt(x) + " " + fmt(y) + "\n";
    }
    return out;
  }
};

struct Document {
  JsonValue::Object json;
  CsvTable csv;
  PlotData plot;
};

inline std::string render(const Document& doc, const std::string& format) {
  if (format == "json") return JsonValue(doc.json).dump() + "\n";
  if (format == "csv") return doc.csv.str();
  if (format == "plotdata") return doc.plot.str();
  throw std::invalid_argument("unknown output format: " + format);
}

inline JsonValue::Object base_report(const JobSpec& spec) {
  JsonValue::Object obj;
  obj["schema"] = "laminate-spectra/1";
  obj["command"] = spec.command;
  return obj;
}

inline LaminateProfile profile_of(const JobSpec& spec) {
  if (spec.alpha.empty())
    throw std::invalid_argument("--alpha is required for this command");
  return LaminateProfile(spec.alpha, spec.tol.zero_value);
}

inline DiscreteSequence sequence_of(const JobSpec& spec) {
  if (!spec.lambda_seq.empty())
    return DiscreteSequence::from_values(spec.lambda_seq);
  const int cross_dim = std::max(spec.dim - 1, 1);
  return dirichlet_eigenvalues(cross_dim, spec.k_max);
}

inline double bound_of(const JobSpec& spec, const LaminateProfile& alpha) {
  if (spec.bound_A > 0) {
    if (spec.bound_A <= alpha.max_abs())
      throw std::invalid_argument("--bound must exceed max |alpha_j|");
    return spec.bound_A;
  }
  return 1.0 + 1.5 * alpha.max_abs();
}

// ---- command handlers -----------------------------------------------------

inline Document run_spectrum1d(const JobSpec& spec) {
  const LaminateProfile alpha = profile_of(spec);
  const auto report = inner_spectrum_1d(alpha, spec.tol.eps_p);
  Document doc;
  doc.json = base_report(spec);
  doc.json["alpha"] = JsonValue::array(spec.alpha);
  doc.json["values"] = JsonValue::array(report.value_points);
  std::vector<double> roots;
  for (const auto& z : report.mean_zero_roots) roots.push_back(z.real());
  doc.json["mean_zero_roots"] = JsonValue::array(roots);
  doc.json["tolerance"] = report.tolerance;

  doc.csv.header = {"kind", "value"};
  for (double v : report.value_points)
    doc.csv.rows.push_back({"value_point", fmt(v)});
  for (double v : roots) doc.csv.rows.push_back({"mean_zero_root", fmt(v)});

  PlotData::Family vp{"value_points", {}};
  for (double v : report.value_points) vp.points.emplace_back(v, 0.0);
  PlotData::Family mz{"mean_zero_roots", {}};
  for (double v : roots) mz.points.emplace_back(v, 0.0);
  doc.plot.families = {vp, mz};
  return doc;
}

inline Document run_spectrumdd(const JobSpec& spec) {
  const LaminateProfile alpha = profile_of(spec);
  const DiscreteSequence seq = sequence_of(spec);
  const double A = bound_of(spec, alpha);
  const auto report =
      inner_spectrum_dd(alpha, seq, A, spec.s_resolution, spec.tol);

  Document doc;
  doc.json = base_report(spec);
  doc.json["alpha"] = JsonValue::array(spec.alpha);
  doc.json["bound_A"] = report.bound_A;
  doc.json["continuous_spectrum_caveat"] = report.continuous_spectrum_caveat;
  doc.json["values"] = JsonValue::array(report.value_points);
  doc.json["mean_zero_shifts"] = JsonValue::array(report.mean_zero_shifts);
  JsonValue::Array roots;
  for (const auto& rt : report.scan_roots) {
    JsonValue::Object o;
    o["s"] = rt.s;
    o["t"] = rt.t;
    o["k"] = static_cast<double>(rt.k_index);
    o["residual"] = rt.residual;
    roots.push_back(JsonValue(std::move(o)));
  }
  doc.json["scan_roots"] = JsonValue(std::move(roots));

  doc.csv.header = {"kind", "s", "t", "k"};
  for (double v : report.value_points)
    doc.csv.rows.push_back({"value_point", fmt(v), "", ""});
  for (const auto& rt : report.scan_roots)
    doc.csv.rows.push_back(
        {"scan_root", fmt(rt.s), fmt(rt.t), std::to_string(rt.k_index)});
  for (double v : report.mean_zero_shifts)
    doc.csv.rows.push_back({"mean_zero_shift", fmt(v), "", ""});

  PlotData::Family vp{"value_points", {}}, sr{"scan_roots", {}},
      mz{"mean_zero_shifts", {}};
  for (double v : report.value_points) vp.points.emplace_back(v, 0.0);
  for (const auto& rt : report.scan_roots) sr.points.emplace_back(rt.s, rt.t);
  for (double v : report.mean_zero_shifts) mz.points.emplace_back(v, 0.0);
  doc.plot.families = {vp, sr, mz};
  return doc;
}

inline Document run_wellposed(const JobSpec& spec) {
  const LaminateProfile alpha = profile_of(spec);
  Document doc;
  doc.json = base_report(spec);
  doc.json["alpha"] = JsonValue::array(spec.alpha);
  const double mi = mean_inv(alpha);
  doc.json["mean_inv"] = mi;
  const bool wp1 = is_well_posed_1d(alpha, spec.tol);
  doc.json["well_posed_1d"] = wp1;

  doc.csv.header = {"key", "value"};
  doc.csv.rows.push_back({"mean_inv", fmt(mi)});
  doc.csv.rows.push_back({"well_posed_1d", wp1 ? "true" : "false"});

  if (spec.dim >= 2) {
    const DiscreteSequence seq = sequence_of(spec);
    const bool wp = well_posed_dd(alpha, seq, spec.tol);
    const auto qres =
        qcrit_check(alpha, seq, spec.delta_grid, CutoffPolicy{}, spec.tol);
    JsonValue::Object dd;
    dd["t0"] = std::tanh(std::sqrt(seq.min_value()) * alpha.h());
    dd["well_posed"] = wp;
    JsonValue::Object q;
    q["satisfied"] = qres.satisfied;
    q["delta0"] = qres.delta0;
    q["k_checked"] = qres.k_checked;
    q["k_certified"] = qres.k_certified;
    q["mu_star"] = qres.mu_star;
    q["tail_certified"] = qres.tail_certified;
    if (qres.witness) {
      JsonValue::Object w;
      w["k"] = qres.witness->k_index;
      w["d"] = qres.witness->d;
      w["q_value"] = qres.witness->q_value;
      q["witness"] = JsonValue(std::move(w));
    } else {
      q["witness"] = nullptr;
    }
    dd["qcriterion"] = JsonValue(std::move(q));
    doc.json["dd"] = JsonValue(std::move(dd));
    doc.csv.rows.push_back({"well_posed_dd", wp ? "true" : "false"});
    doc.csv.rows.push_back(
        {"qcriterion_satisfied", qres.satisfied ? "true" : "false"});
    doc.csv.rows.push_back({"delta0", fmt(qres.delta0)});
  }

  PlotData::Family pa{"p_alpha", {}};
  for (int i = 1; i <= 200; ++i) {
    const double t = static_cast<double>(i) / 200.0;
    pa.points.emplace_back(t, p_alpha(alpha, t));
  }
  doc.plot.families = {pa};
  return doc;
}

inline Document run_homogenize(const JobSpec& spec) {
  const LaminateProfile alpha = profile_of(spec);
  Document doc;
  doc.json = base_report(spec);
  doc.json["alpha"] = JsonValue::array(spec.alpha);
  doc.json["dim"] = spec.dim;
  doc.csv.header = {"key", "value"};

  JsonValue::Object coeff;
  JsonValue::Object spectrum;
  std::vector<double> spectrum_points;

  if (spec.dim <= 1) {
    const auto lim = g_limit_1d(alpha, spec.tol);
    doc.json["case"] = to_string(lim.tag);
    doc.csv.rows.push_back({"case", to_string(lim.tag)});
    if (lim.tag == LimitCase::scalar_1d) {
      coeff["scalar"] = lim.scalar;
      doc.csv.rows.push_back({"scalar", fmt(lim.scalar)});
    }
    const auto sp = limit_inner_spectrum_1d(alpha, spec.tol);
    spectrum["kind"] = to_string(sp.kind);
    spectrum["points"] = JsonValue::array(sp.points);
    spectrum_points = sp.points;
  } else {
    const auto lim = limit_coefficient(alpha, spec.dim, spec.tol);
    doc.json["case"] = to_string(lim.tag);
    doc.json["k_max"] = spec.k_max;
    doc.csv.rows.push_back({"case", to_string(lim.tag)});
    if (lim.tag == LimitCase::fourth_order_b) {
      coeff["scalar"] = lim.scalar;
      doc.csv.rows.push_back({"scalar", fmt(lim.scalar)});
    } else if (lim.tag == LimitCase::diagonal_c) {
      coeff["diagonal"] = JsonValue::array(lim.diagonal);
      for (std::size_t i = 0; i < lim.diagonal.size(); ++i)
        doc.csv.rows.push_back(
            {"diagonal_" + std::to_string(i), fmt(lim.diagonal[i])});
    }
    if (lim.tag == LimitCase::diagonal_c &&
        !(mean(alpha) * mean_inv(alpha) > 0)) {
      spectrum["kind"] = "withheld";
      spectrum["diagnostic"] =
          "case c with m(alpha) m(1/alpha) < 0: no closed-form generator set";
    } else {
      const auto sp = limit_inner_spectrum(alpha, spec.dim, spec.k_max,
                                           spec.tol);
      spectrum["kind"] = to_string(sp.kind);
      spectrum["points"] = JsonValue::array(sp.points);
      if (!sp.generator.empty()) spectrum["generator"] = sp.generator;
      spectrum["accumulates_at_zero"] = sp.accumulates_at_zero;
      spectrum["unbounded"] = sp.unbounded;
      spectrum_points = sp.points;
    }
  }
  doc.json["coefficient"] = JsonValue(std::move(coeff));
  doc.json["spectrum"] = JsonValue(std::move(spectrum));
  for (double v : spectrum_points)
    doc.csv.rows.push_back({"spectrum_point", fmt(v)});

  PlotData::Family sp{"limit_spectrum_points", {}};
  for (double v : spectrum_points) sp.points.emplace_back(v, 0.0);
  doc.plot.families = {sp};
  return doc;
}

inline Document run_gamma(const JobSpec& spec) {
  const auto sp = gamma_inner_spectrum(spec.gamma, spec.dim, spec.k_max);
  Document doc;
  doc.json = base_report(spec);
  doc.json["gamma"] = spec.gamma;
  doc.json["dim"] = spec.dim;
  doc.json["k_max"] = spec.k_max;
  doc.json["points"] = JsonValue::array(sp.points);
  doc.json["generator"] = sp.generator;

  doc.csv.header = {"index", "value"};
  for (std::size_t i = 0; i < sp.points.size(); ++i)
    doc.csv.rows.push_back({std::to_string(i), fmt(sp.points[i])});

  PlotData::Family f{"gamma_spectrum_points", {}};
  for (double v : sp.points) f.points.emplace_back(v, 0.0);
  doc.plot.families = {f};
  return doc;
}

inline Document run_oracle(const JobSpec& spec) {
  Document doc;
  doc.json = base_report(spec);
  doc.json["kind"] = spec.oracle_kind;
  doc.csv.header = {"index", "value"};

  if (spec.oracle_kind == "fd") {
    const LaminateProfile alpha = profile_of(spec);
    std::vector<double> beta = spec.beta;
    if (beta.empty()) beta.assign(alpha.slab_count(), 0.0);
    const auto op = assemble_fd_1d(alpha, beta,
                                   static_cast<std::size_t>(spec.grid_n));
    doc.json["alpha"] = JsonValue::array(spec.alpha);
    doc.json["beta"] = JsonValue::array(beta);
    doc.json["grid_n"] = spec.grid_n;
    doc.json["min_singular_value"] = min_singular_value(op);
    const auto eigs =
        smallest_eigs(op, static_cast<std::size_t>(spec.eig_count));
    doc.json["smallest_eigenvalues"] = JsonValue::array(eigs);
    for (std::size_t i = 0; i < eigs.size(); ++i)
      doc.csv.rows.push_back({std::to_string(i), fmt(eigs[i])});
    PlotData::Family f{"smallest_eigenvalues", {}};
    for (std::size_t i = 0; i < eigs.size(); ++i)
      f.points.emplace_back(static_cast<double>(i), eigs[i]);
    doc.plot.families = {f};
    if (!spec.dump_path.empty()) {
      std::ofstream out(spec.dump_path);
      if (!out) throw std::invalid_argument("cannot open " + spec.dump_path);
      dump_triplets(out, op);
      doc.json["dump"] = spec.dump_path;
    }
  } else if (spec.oracle_kind == "galerkin") {
    GalerkinProjection proj;
    if (!spec.alpha.empty()) {
      const LaminateProfile alpha = profile_of(spec);
      proj = assemble_galerkin(alpha, spec.dim, spec.modes_M);
      doc.json["alpha"] = JsonValue::array(spec.alpha);
    } else {
      proj = assemble_galerkin_gamma(spec.gamma, spec.dim, spec.modes_M);
      doc.json["gamma"] = spec.gamma;
    }
    doc.json["dim"] = spec.dim;
    doc.json["modes"] = spec.modes_M;
    const auto eigs = galerkin_spectrum(proj, spec.tol.eigensolver);
    doc.json["eigenvalue_count"] = eigs.size();
    doc.json["eig_min"] = eigs.front();
    doc.json["eig_max"] = eigs.back();
    doc.json["eigenvalues"] = JsonValue::array(eigs);
    for (std::size_t i = 0; i < eigs.size(); ++i)
      doc.csv.rows.push_back({std::to_string(i), fmt(eigs[i])});
    PlotData::Family f{"galerkin_eigenvalues", {}};
    for (std::size_t i = 0; i < eigs.size(); ++i)
      f.points.emplace_back(static_cast<double>(i), eigs[i]);
    doc.plot.families = {f};
    if (!spec.dump_path.empty()) {
      std::ofstream out(spec.dump_path);
      if (!out) throw std::invalid_argument("cannot open " + spec.dump_path);
      dump_triplets(out, proj);
      doc.json["dump"] = spec.dump_path;
    }
  } else {
    throw std::invalid_argument("oracle kind must be fd or galerkin");
  }
  return doc;
}

inline Document run_scan(const JobSpec& spec) {
  const LaminateProfile alpha = profile_of(spec);
  const DiscreteSequence seq = sequence_of(spec);
  const auto res =
      qcrit_check(alpha, seq, spec.delta_grid, CutoffPolicy{}, spec.tol);

  Document doc;
  doc.json = base_report(spec);
  doc.json["alpha"] = JsonValue::array(spec.alpha);
  doc.json["delta_grid"] = JsonValue::array(spec.delta_grid);
  doc.json["satisfied"] = res.satisfied;
  doc.json["delta0"] = res.delta0;
  doc.json["k_checked"] = res.k_checked;
  doc.json["k_certified"] = res.k_certified;
  doc.json["mu_star"] = res.mu_star;
  doc.json["tail_certified"] = res.tail_certified;
  doc.json["chi"] = chi(alpha);
  if (res.witness) {
    JsonValue::Object w;
    w["k"] = res.witness->k_index;
    w["d"] = res.witness->d;
    w["q_value"] = res.witness->q_value;
    doc.json["witness"] = JsonValue(std::move(w));
  } else {
    doc.json["witness"] = nullptr;
  }
  JsonValue::Array diags;
  for (const auto& s : res.diagnostics) diags.push_back(JsonValue(s));
  doc.json["diagnostics"] = JsonValue(std::move(diags));
  doc.json["skipped_count"] = res.skipped.size();

  doc.csv.header = {"key", "value"};
  doc.csv.rows.push_back({"satisfied", res.satisfied ? "true" : "false"});
  doc.csv.rows.push_back({"delta0", fmt(res.delta0)});
  doc.csv.rows.push_back({"k_checked", std::to_string(res.k_checked)});
  doc.csv.rows.push_back({"k_certified", std::to_string(res.k_certified)});
  doc.csv.rows.push_back({"mu_star", fmt(res.mu_star)});

  PlotData::Family f{"mu_times_q_tilde", {}};
  for (int i = 0; i <= 300; ++i) {
    const double mu = 0.5 * std::pow(4000.0, i / 300.0);
    f.points.emplace_back(mu, mu * q_tilde_equal(alpha, mu));
  }
  doc.plot.families = {f};
  return doc;
}

}  // namespace detail

/// Dispatch a validated job; throws on precondition violations.
inline RunResult run(const JobSpec& spec) {
  detail::Document doc;
  if (spec.command == "spectrum1d")
    doc = detail::run_spectrum1d(spec);
  else if (spec.command == "spectrumdd")
    doc = detail::run_spectrumdd(spec);
  else if (spec.command == "wellposed")
    doc = detail::run_wellposed(spec);
  else if (spec.command == "homogenize")
    doc = detail::run_homogenize(spec);
  else if (spec.command == "gamma")
    doc = detail::run_gamma(spec);
  else if (spec.command == "oracle")
    doc = detail::run_oracle(spec);
  else if (spec.command == "scan")
    doc = detail::run_scan(spec);
  else
    throw std::invalid_argument("unknown command: " + spec.command);
  return RunResult{detail::render(doc, spec.format), 0};
}

inline void add_common_options(CLI::App* cmd, JobSpec& spec,
                               bool needs_alpha = true) {
  auto* alpha =
      cmd->add_option("--alpha", spec.alpha,
                      "comma-separated slab values alpha_0..alpha_r on equal "
                      "slabs (unequal widths are not supported)")
          ->delimiter(',');
  if (needs_alpha) alpha->required();
  cmd->add_option("--format", spec.format, "json | csv | plotdata")
      ->check(CLI::IsMember({"json", "csv", "plotdata"}));
  cmd->add_option("--eps-p", spec.tol.eps_p,
                  "relative zero threshold for characteristic values");
  cmd->add_option("--degeneracy-tol", spec.tol.degeneracy,
                  "scaled threshold for degenerate integral means");
  cmd->add_option("--eig-tol", spec.tol.eigensolver,
                  "eigensolver convergence threshold");
}

/// Build the CLI11 application over a JobSpec. The spec must outlive the app.
inline std::unique_ptr<CLI::App> make_app(JobSpec& spec) {
  auto app = std::make_unique<CLI::App>(
      "laminate-spectra: well-posedness, inner spectra and homogenised "
      "limits of divergence-form operators with piecewise-constant "
      "sign-changing coefficients");
  app->require_subcommand(1);

  auto* sp1 = app->add_subcommand(
      "spectrum1d", "exact 1-D inner spectrum of a laminate");
  add_common_options(sp1, spec);
  sp1->callback([&spec] { spec.command = "spectrum1d"; });

  auto* spdd = app->add_subcommand(
      "spectrumdd", "discrete-part inner spectrum scan in d dimensions");
  add_common_options(spdd, spec);
  spdd->add_option("--dim", spec.dim, "ambient dimension d >= 2")
      ->check(CLI::Range(2, 8));
  spdd->add_option("--kmax", spec.k_max,
                   "per-axis cap for the cross-section eigenvalues");
  spdd->add_option("--bound", spec.bound_A, "scan bound A > max |alpha_j|");
  spdd->add_option("--lambda", spec.lambda_seq,
                   "user-supplied cross-section eigenvalues")
      ->delimiter(',');
  spdd->add_option("--s-resolution", spec.s_resolution,
                   "grid step for the sign-change cross-check (0 = off)");
  spdd->callback([&spec] { spec.command = "spectrumdd"; });

  auto* wp = app->add_subcommand(
      "wellposed", "well-posedness in 1-D and d dimensions");
  add_common_options(wp, spec);
  wp->add_option("--dim", spec.dim, "ambient dimension (1 for 1-D only)")
      ->check(CLI::Range(1, 8));
  wp->add_option("--kmax", spec.k_max, "per-axis cross-section cap");
  wp->add_option("--lambda", spec.lambda_seq, "user cross-section eigenvalues")
      ->delimiter(',');
  wp->add_option("--delta", spec.delta_grid,
                 "perturbation magnitudes for the criterion scan")
      ->delimiter(',');
  wp->callback([&spec] { spec.command = "wellposed"; });

  auto* hom = app->add_subcommand(
      "homogenize", "case classification, limit coefficient, limit spectrum");
  add_common_options(hom, spec);
  hom->add_option("--dim", spec.dim, "ambient dimension")
      ->check(CLI::Range(1, 8));
  hom->add_option("--kmax", spec.k_max, "mode cap for the generator set");
  hom->callback([&spec] { spec.command = "homogenize"; });

  auto* gam = app->add_subcommand(
      "gamma", "inner spectrum generators of diag(gamma,1,..,1) on the box");
  add_common_options(gam, spec, /*needs_alpha=*/false);
  gam->add_option("--gamma", spec.gamma, "diagonal entry gamma > 0")
      ->required();
  gam->add_option("--dim", spec.dim, "ambient dimension")
      ->check(CLI::Range(2, 8));
  gam->add_option("--kmax", spec.k_max, "mode cap for the generator set");
  gam->callback([&spec] { spec.command = "gamma"; });

  auto* orc = app->add_subcommand(
      "oracle", "finite-difference / Fourier-Galerkin discretization oracle");
  add_common_options(orc, spec, /*needs_alpha=*/false);
  orc->add_option("--kind", spec.oracle_kind, "fd | galerkin")
      ->check(CLI::IsMember({"fd", "galerkin"}));
  orc->add_option("--grid", spec.grid_n, "FD cells (slab-aligned)");
  orc->add_option("--beta", spec.beta, "FD potential per slab")
      ->delimiter(',');
  orc->add_option("--dim", spec.dim, "Galerkin dimension (2 or 3)")
      ->check(CLI::Range(2, 3));
  orc->add_option("--modes", spec.modes_M, "Galerkin per-axis modes (<= 40)");
  orc->add_option("--gamma", spec.gamma, "Galerkin diagonal coefficient");
  orc->add_option("--eig-count", spec.eig_count, "eigenvalues to report");
  orc->add_option("--dump", spec.dump_path,
                  "write the assembled matrix as sparse triplets");
  orc->callback([&spec] { spec.command = "oracle"; });

  auto* scan = app->add_subcommand(
      "scan", "q~-criterion scan over the perturbation grid");
  add_common_options(scan, spec);
  scan->add_option("--dim", spec.dim, "ambient dimension")
      ->check(CLI::Range(2, 8));
  scan->add_option("--kmax", spec.k_max, "per-axis cross-section cap");
  scan->add_option("--lambda", spec.lambda_seq,
                   "user cross-section eigenvalues")
      ->delimiter(',');
  scan->add_option("--delta", spec.delta_grid, "perturbation magnitudes")
      ->delimiter(',');
  scan->callback([&spec] { spec.command = "scan"; });

  return app;
}

/// Parse and run; returns the process exit status. Malformed input yields the
/// CLI11 usage text; numeric degeneracies yield a diagnostic and status 2.
inline int cli_main(int argc, const char* const* argv,
                    std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  JobSpec spec;
  auto app = make_app(spec);
  try {
    app->parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app->exit(e);
  }
  try {
    const RunResult result = run(spec);
    out << result.output;
    return result.exit_code;
  } catch (const degenerate_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const pole_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

/// Convenience wrapper for in-process tests.
inline RunResult run_args(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("lamspec");
  for (const auto& a : args) argv.push_back(a.c_str());
  JobSpec spec;
  auto app = make_app(spec);
  std::ostringstream captured_err;
  try {
    app->parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    const int code = app->exit(e, out, out);
    return RunResult{out.str(), code};
  }
  try {
    return run(spec);
  } catch (const degenerate_error& e) {
    return RunResult{std::string("error: ") + e.what() + "\n", 2};
  } catch (const pole_error& e) {
    return RunResult{std::string("error: ") + e.what() + "\n", 2};
  } catch (const std::invalid_argument& e) {
    return RunResult{std::string("error: ") + e.what() + "\n", 2};
  }
}

}  // namespace lamspec::cli
