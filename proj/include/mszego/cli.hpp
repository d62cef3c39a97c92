#pragma once

// Command-line front end. `run_cli` is kept separate from main() so the test
// suites can drive it directly.

#include <chrono>
#include <cmath>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "asym.hpp"
#include "core.hpp"
#include "curve.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "specfun.hpp"
#include "szego.hpp"

namespace mszego {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitConfig = 2, kExitNonGeneric = 3, kExitNumerical = 4 };

inline int exit_code_for(ErrorKind k) {
  if (is_config_error(k) || k == ErrorKind::NonIntegerExponent) return kExitConfig;
  if (k == ErrorKind::NonGeneric) return kExitNonGeneric;
  return kExitNumerical;
}

namespace cli_detail {

inline nlohmann::json cplx_json(cplx z) { return {z.real(), z.imag()}; }

inline std::vector<cplx> read_points_csv(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<cplx> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double re, im;
    if (ls >> re >> im) out.emplace_back(re, im);  // header lines fail to parse and are skipped
  }
  return out;
}

inline std::vector<cplx> grid_points(int g, double span) {
  std::vector<cplx> out;
  for (int j = 0; j < g; ++j)
    for (int i = 0; i < g; ++i) {
      const double x = g == 1 ? 0.0 : -span + 2.0 * span * i / (g - 1);
      const double y = g == 1 ? 0.0 : -span + 2.0 * span * j / (g - 1);
      out.emplace_back(x, y);
    }
  return out;
}

inline std::string nan_str() { return "nan"; }

inline nlohmann::json levels_json(const SzegoStructure& s) {
  nlohmann::json j;
  j["L"] = s.L;
  j["generic"] = s.generic;
  if (!s.all_generic()) return j;
  AsymptoticModel model(s);
  j["ell"] = nlohmann::json::array();
  j["chains"] = s.chains;
  j["levels"] = s.levels;
  j["chain_constant"] = nlohmann::json::array();
  for (std::size_t i = 0; i < s.nu(); ++i) {
    j["ell"].push_back(cplx_json(s.ell[i]));
    j["chain_constant"].push_back(cplx_json(model.chain_constant(static_cast<Label>(i + 1))));
  }
  return j;
}

}  // namespace cli_detail

/// Runs one CLI invocation; returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  using namespace cli_detail;
  CLI::App app{"Multiple Szego curves and strong asymptotics of planar orthogonal polynomials"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON configuration file");

  auto* validate = app.add_subcommand("validate", "validate and normalize a configuration");
  auto* levels = app.add_subcommand("levels", "levels L, ell, chains and chain constants as JSON");
  std::string out_path;
  for (auto* sc : {validate, levels}) sc->add_option("--out", out_path, "output JSON file (default: stdout)");

  auto* curve = app.add_subcommand("curve", "trace the multiple Szego curve");
  int grid = 400;
  double tol = 1e-8;
  std::string svg_path;
  curve->add_option("--grid", grid, "lattice resolution");
  curve->add_option("--tol", tol, "edge bisection tolerance");
  curve->add_option("--out", out_path, "arc CSV")->required();
  curve->add_option("--svg", svg_path, "optional SVG plot");

  auto* asymp = app.add_subcommand("asymp", "evaluate the asymptotic formulas");
  std::string points_path, mode = "uniform";
  int agrid = 0;
  double tau = kDefaultTau;
  auto* popt = asymp->add_option("--points", points_path, "CSV of re,im points");
  auto* gopt = asymp->add_option("--grid", agrid, "G x G grid over [-1.5, 1.5]^2");
  popt->excludes(gopt);
  asymp->add_option("--mode", mode, "region | uniform | local")->check(CLI::IsMember({"region", "uniform", "local"}));
  asymp->add_option("--tau", tau, "uniform-sum cutoff");
  asymp->add_option("--out", out_path, "output CSV")->required();

  auto* fc = app.add_subcommand("fc", "tabulate f_c and |E_c| on a grid");
  double c_val = 1.0, range = 10.0;
  int fgrid = 41;
  fc->add_option("--c", c_val, "exponent c")->required();
  fc->add_option("--grid", fgrid, "G x G grid over [-range, range]^2");
  fc->add_option("--range", range, "half-width of the grid");
  fc->add_option("--out", out_path, "output CSV")->required();

  auto* fcz = app.add_subcommand("fc-zeros", "zeros of E_c in a box");
  std::vector<double> box;
  double ztol = 1e-10;
  fcz->add_option("--c", c_val, "exponent c")->required();
  fcz->add_option("--box", box, "xmin xmax ymin ymax")->expected(4)->delimiter(',')->required();
  fcz->add_option("--tol", ztol, "boundary/zero tolerance");
  fcz->add_option("--out", out_path, "output CSV")->required();

  auto* oracle = app.add_subcommand("oracle", "exact orthogonal polynomial and its roots");
  int degree = 0;
  std::string method = "exact";
  oracle->add_option("--degree", degree, "degree n")->required();
  oracle->add_option("--method", method, "exact | quad")->check(CLI::IsMember({"exact", "quad"}));
  oracle->add_option("--out", out_path, "root CSV")->required();

  auto* compare = app.add_subcommand("compare", "asymptotics versus oracle");
  int cgrid = 400;
  compare->add_option("--degree", degree, "degree n")->required();
  compare->add_option("--method", method, "exact | quad")->check(CLI::IsMember({"exact", "quad"}));
  compare->add_option("--grid", cgrid, "curve lattice resolution");
  compare->add_option("--out", out_path, "error table CSV (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  RunManifest manifest;
  manifest.config_path = config_path;
  auto finish = [&](const std::string& cmd, const nlohmann::json& params) {
    manifest.command = cmd;
    manifest.parameters = params;
    manifest.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!out_path.empty()) write_file(out_path + ".manifest.json", manifest.to_json().dump(2) + "\n");
  };
  auto emit = [&](const std::string& text) {
    if (out_path.empty()) {
      out << text;
    } else {
      write_file(out_path, text);
      manifest.outputs.push_back(out_path);
    }
  };

  try {
    auto load = [&](std::optional<int> degree_override = std::nullopt) {
      if (config_path.empty()) throw Error(ErrorKind::ParseError, "--config is required");
      Configuration raw = parse_config(read_file(config_path));
      if (degree_override) raw.n = *degree_override;
      return validate_config(raw);
    };

    if (*validate) {
      const auto cfg = load();
      emit(config_to_json(cfg).dump(2) + "\n");
      finish("validate", nlohmann::json::object());
    } else if (*levels) {
      const auto cfg = load();
      const auto s = build_structure(cfg, false);
      emit(levels_json(s).dump(2) + "\n");
      finish("levels", nlohmann::json::object());
      if (!s.all_generic()) {
        err << "configuration is not generic\n";
        return kExitNonGeneric;
      }
    } else if (*curve) {
      const auto cfg = load();
      const auto s = build_structure(cfg);
      const auto cs = trace_curve(s, grid, tol);
      emit(curve_csv(cs));
      if (!svg_path.empty()) {
        write_file(svg_path, curve_svg(cs, cfg.a));
        manifest.outputs.push_back(svg_path);
      }
      finish("curve", {{"grid", grid}, {"tol", tol}, {"arcs", cs.arcs.size()}, {"junctions", cs.junctions.size()}});
    } else if (*asymp) {
      const auto cfg = load();
      const AsymptoticModel model(build_structure(cfg));
      std::vector<cplx> pts;
      if (!points_path.empty()) {
        pts = read_points_csv(points_path);
      } else if (agrid > 0) {
        pts = grid_points(agrid, 1.5);
      } else {
        throw Error(ErrorKind::ParseError, "asymp needs --points or --grid");
      }
      std::string csv = "re,im,value_re,value_im,label,formula_used\n";
      for (const cplx& z : pts) {
        const Label lab = classify(z, model.structure());
        Formula used = Formula::Region;
        cplx v;
        try {
          if (mode == "region") {
            v = model.eval_region(z);
          } else if (mode == "uniform") {
            used = Formula::Uniform;
            v = model.eval_uniform(z, tau);
          } else {
            Label j = 0;
            used = model.choose(z, &j);
            v = used == Formula::Local ? model.eval_local(z, j) : model.eval_uniform(z, tau);
          }
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::OnCut) throw;
          v = cplx(std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN());
        }
        csv += csv_row({fmt(z.real()), fmt(z.imag()), std::isnan(v.real()) ? nan_str() : fmt(v.real()),
                        std::isnan(v.imag()) ? nan_str() : fmt(v.imag()), std::to_string(lab), to_string(used)});
      }
      emit(csv);
      finish("asymp", {{"mode", mode}, {"tau", tau}, {"points", pts.size()}});
    } else if (*fc) {
      std::string csv = "re,im,f_re,f_im,abs_E\n";
      for (const cplx& z : grid_points(fgrid, range)) {
        std::string fr = nan_str(), fi = nan_str();
        if (!(z.imag() == 0.0 && z.real() <= 0.0)) {
          const cplx f = f_c(z, c_val);
          fr = fmt(f.real());
          fi = fmt(f.imag());
        }
        csv += csv_row({fmt(z.real()), fmt(z.imag()), fr, fi, fmt(std::abs(E_c(z, c_val)))});
      }
      emit(csv);
      finish("fc", {{"c", c_val}, {"grid", fgrid}, {"range", range}});
    } else if (*fcz) {
      const Box b{box[0], box[1], box[2], box[3]};
      const auto zs = zeros_E_c(c_val, b, ztol);
      std::string csv = "re,im,abs_E\n";
      for (const cplx& z : zs) csv += csv_row({fmt(z.real()), fmt(z.imag()), fmt(std::abs(E_c(z, c_val)))});
      emit(csv);
      finish("fc-zeros", {{"c", c_val}, {"box", box}, {"tol", ztol}, {"count", zs.size()}});
    } else if (*oracle) {
      const auto cfg = load(degree);
      const auto M = moments(cfg, degree, method == "exact");
      const auto P = monic_op(M, degree);
      std::string csv = "re,im,residual\n";
      if (degree > 0) {
        const auto R = roots(P);
        for (std::size_t i = 0; i < R.roots.size(); ++i)
          csv += csv_row({fmt(R.roots[i].real()), fmt(R.roots[i].imag()), fmt(R.residual[i])});
      }
      emit(csv);
      const nlohmann::json summary = {{"degree", degree},
                                      {"method", method},
                                      {"h_n", P.h.to_double()},
                                      {"max_orthogonality_residual", P.max_residual},
                                      {"pivot_ratio", P.pivot_ratio}};
      out << summary.dump(2) << "\n";
      finish("oracle", summary);
    } else if (*compare) {
      const auto cfg = load(degree);
      const auto s = build_structure(cfg);
      const AsymptoticModel model(s);
      const auto P = monic_op(moments(cfg, degree, method == "exact"), degree);

      std::vector<cplx> pts;
      for (int m = 0; m < 16; ++m) pts.push_back(std::polar(1.5, 2.0 * kPi * (m + 0.5) / 16));
      for (std::size_t j = 1; j <= s.nu(); ++j) pts.push_back(0.5 * s.a(static_cast<Label>(j)));
      for (const cplx& z : grid_points(9, 0.8)) pts.push_back(z + cplx(0.013, 0.007));

      std::string csv = "re,im,label,formula_used,oracle_re,oracle_im,asym_re,asym_im,rel_error\n";
      double worst_outer = 0.0;
      for (const cplx& z : pts) {
        Label j = 0;
        const Formula f = model.choose(z, &j);
        cplx v;
        try {
          v = f == Formula::Local ? model.eval_local(z, j) : model.eval_uniform(z);
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::OnCut) continue;
          throw;
        }
        const cplx p = P(z);
        const double rel = std::abs(v - p) / std::abs(p);
        if (std::abs(z) > 1.0) worst_outer = std::max(worst_outer, rel);
        csv += csv_row({fmt(z.real()), fmt(z.imag()), std::to_string(classify(z, s)), to_string(f), fmt(p.real()),
                        fmt(p.imag()), fmt(v.real()), fmt(v.imag()), fmt(rel)});
      }
      emit(csv);

      const auto cs = trace_curve(s, cgrid, 1e-8);
      const auto R = roots(P);
      std::vector<double> excl;
      for (std::size_t j = 1; j <= s.nu(); ++j) excl.push_back(model.disk_radius(static_cast<Label>(j)));
      const auto d = root_curve_distance(R.roots, cs, cfg.a, excl);
      const nlohmann::json summary = {{"degree", degree},
                                      {"max_rel_error_outside_disk", worst_outer},
                                      {"root_curve_distance", {{"count", d.count}, {"max", d.max}, {"mean", d.mean}}}};
      if (!out_path.empty()) out << summary.dump(2) << "\n";
      else err << summary.dump(2) << "\n";
      finish("compare", summary);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace mszego
