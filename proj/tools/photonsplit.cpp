#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "psplit/io.hpp"
#include "psplit/optimizer.hpp"
#include "psplit/singlemode.hpp"
#include "psplit/sweep.hpp"
#include "psplit/verify.hpp"

namespace {

using namespace psplit;

constexpr double kPi = std::numbers::pi;

// Round-trip formatting for generated range specs: parsing the echoed text
// reproduces the same doubles, keeping reruns byte-identical.
std::string format_exact(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

double to_double(const std::string& text) {
  std::size_t pos = 0;
  const double v = std::stod(text, &pos);
  if (pos != text.size()) throw std::invalid_argument("trailing characters");
  return v;
}

int to_int(const std::string& text) {
  std::size_t pos = 0;
  const int v = std::stoi(text, &pos);
  if (pos != text.size()) throw std::invalid_argument("trailing characters");
  return v;
}

struct RangeSpec {
  std::string text;
  std::vector<double> values;
};

// "<v>" is a single value; "<a:b:n>" is an inclusive n-point grid from a
// to b (n = 1 collapses to a).
RangeSpec parse_range(const std::string& text) {
  RangeSpec spec;
  spec.text = text;
  std::vector<std::string> parts;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ':')) parts.push_back(token);
  try {
    if (parts.size() == 1) {
      spec.values.push_back(to_double(parts[0]));
    } else if (parts.size() == 3) {
      const double lo = to_double(parts[0]);
      const double hi = to_double(parts[1]);
      const int count = to_int(parts[2]);
      if (count < 1) throw std::invalid_argument("count");
      if (count == 1) {
        spec.values.push_back(lo);
      } else {
        if (!(lo < hi)) throw std::invalid_argument("order");
        for (int i = 0; i < count; ++i)
          spec.values.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                         static_cast<double>(count - 1));
      }
    } else {
      throw std::invalid_argument("shape");
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + text +
                                "': expected <v> or <a:b:n>");
  }
  return spec;
}

struct CliOptions {
  std::string kind_name = "unentangled";
  std::string gamma_text;  // empty = per-command default
  std::string omega_text;
  double phi = 0.0;
  double delta = 0.0;
  double chi = 1e-3;
  double tol = 1e-7;
  std::string out_path = "-";
  std::string format_name = "csv";
  std::string atom_rate_name = "sqrt2gamma";
};

const char* kGammaGridDefault = "0.015:3:200";

std::string omega_grid_default() {  // 200 steps of (pi/2)/200 from zero
  return "0:" + format_exact(199.0 * (kPi / 2.0) / 200.0) + ":200";
}

RunConfig make_config(const char* command, const CliOptions& opt,
                      const std::string& gamma_spec,
                      const std::string& omega_spec) {
  RunConfig config;
  config.command = command;
  config.kind = opt.kind_name;
  config.gamma_spec = gamma_spec;
  config.omega_spec = omega_spec;
  config.phi = opt.phi;
  config.delta = opt.delta;
  config.chi = opt.chi;
  config.tol = opt.tol;
  config.provenance = "analytic";
  config.format = opt.format_name;
  config.out_path = opt.out_path;
  return config;
}

void with_output(const std::string& path,
                 const std::function<void(std::ostream&)>& writer) {
  if (path == "-") {
    writer(std::cout);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output path: " + path);
  writer(file);
  if (!file) throw std::runtime_error("failed while writing: " + path);
}

void require_positive_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol))
    throw std::invalid_argument("tolerance must be positive");
}

int run_sweep_command(const CliOptions& opt, bool slice) {
  require_positive_tol(opt.tol);
  const SystemKind kind = parse_kind(opt.kind_name);
  const OutputFormat format = parse_format(opt.format_name);
  const RangeSpec gamma = parse_range(
      opt.gamma_text.empty() ? kGammaGridDefault : opt.gamma_text);
  const std::string omega_default = slice ? "0" : omega_grid_default();
  const RangeSpec omega =
      parse_range(opt.omega_text.empty() ? omega_default : opt.omega_text);
  if (slice && gamma.values.size() != 1 && omega.values.size() != 1)
    throw std::invalid_argument(
        "slice pins at least one axis to a single value");

  SweepRequest request;
  request.kind = kind;
  request.gamma_values = gamma.values;
  request.omega_values = omega.values;
  request.phi = opt.phi;
  request.delta = opt.delta;
  request.chi = opt.chi;
  request.provenance = Provenance::Analytic;
  request.quad.rel_tol = opt.tol;
  request.validate();
  const std::vector<SweepRow> rows = run_sweep(request);

  KeyValues meta;
  if (kind == SystemKind::Unentangled) {
    // Spot-check the closed form against the integration pipeline on a few
    // rows so every emitted file is self-validated.
    QuadratureSettings settings;
    settings.rel_tol = opt.tol;
    double worst = 0.0;
    std::size_t previous = rows.size();
    for (std::size_t index : {std::size_t{0}, rows.size() / 2, rows.size() - 1}) {
      if (index == previous) continue;
      previous = index;
      const SweepRow& row = rows[index];
      SystemParams params;
      params.gamma = row.gamma;
      const double numeric =
          splitting_efficiency_numeric(params, {row.omega, row.phi}, settings)
              .s;
      worst = std::max(worst, std::abs(numeric - row.s));
    }
    if (worst > 1e-6) {
      std::cerr << "numeric spot check failed: |S_numeric - S| = " << worst
                << '\n';
      return 1;
    }
    meta.emplace_back("numeric_spot_checks",
                      "max |S_numeric - S| = " + format_number(worst));
  } else {
    meta.emplace_back("numeric_spot_checks",
                      "skipped (closed form at phi = 0)");
  }

  const RunConfig config =
      make_config(slice ? "slice" : "sweep", opt, gamma.text, omega.text);
  with_output(opt.out_path, [&](std::ostream& out) {
    write_rows(out, format, config, rows, meta);
  });
  return 0;
}

int run_optimize_command(const CliOptions& opt, bool phi_given) {
  require_positive_tol(opt.tol);
  const SystemKind kind = parse_kind(opt.kind_name);
  const OutputFormat format = parse_format(opt.format_name);
  const bool entangled = kind == SystemKind::Entangled;
  if (entangled && opt.phi != 0.0)
    throw std::invalid_argument(
        "entangled efficiency is defined at phi = 0 only");
  if (entangled && !(opt.delta >= 0.0))
    throw std::invalid_argument("delta must be nonnegative");
  const RangeSpec gamma = parse_range(
      opt.gamma_text.empty() ? kGammaGridDefault : opt.gamma_text);
  const RangeSpec omega = parse_range(
      opt.omega_text.empty() ? omega_grid_default() : opt.omega_text);
  for (double g : gamma.values)
    if (!(g > 0.0)) throw std::invalid_argument("gamma must be positive");

  const auto value_at = [&](double g, double w, double p) {
    return entangled
               ? splitting_efficiency_analytic_entangled(g, opt.delta, w)
               : splitting_efficiency_analytic_unentangled(g, {w, p});
  };

  // Parameter slots: 0 = gamma, 1 = omega, 2 = phi.  An axis given as a
  // single value is pinned; phi joins the refinement for the unentangled
  // kind unless set explicitly.
  double point[3] = {gamma.values.front(), omega.values.front(), opt.phi};
  std::vector<int> grid_param;
  std::vector<AxisRange> axes;
  if (gamma.values.size() >= 2) {
    axes.push_back({gamma.values.front(), gamma.values.back(),
                    static_cast<int>(gamma.values.size())});
    grid_param.push_back(0);
  }
  if (omega.values.size() >= 2) {
    axes.push_back({omega.values.front(), omega.values.back(),
                    static_cast<int>(omega.values.size())});
    grid_param.push_back(1);
  }
  long grid_evaluations = 0;
  if (!axes.empty()) {
    const Objective grid_objective = [&](const std::vector<double>& x) {
      double full[3] = {point[0], point[1], point[2]};
      for (std::size_t i = 0; i < grid_param.size(); ++i)
        full[grid_param[i]] = x[i];
      return value_at(full[0], full[1], full[2]);
    };
    const GridScanResult scan = grid_scan(grid_objective, axes);
    grid_evaluations = scan.evaluated;
    for (std::size_t i = 0; i < grid_param.size(); ++i)
      point[grid_param[i]] = scan.best_point[i];
  }

  std::vector<int> refine_param = grid_param;
  if (!entangled && !phi_given) refine_param.push_back(2);
  long refine_evaluations = 0;
  bool converged = true;
  if (!refine_param.empty()) {
    const auto bounds_of = [&](int param) -> std::pair<double, double> {
      if (param == 0) return {gamma.values.front(), gamma.values.back()};
      if (param == 1) return {omega.values.front(), omega.values.back()};
      return {-kPi, kPi};
    };
    const Objective refine_objective = [&](const std::vector<double>& x) {
      double full[3] = {point[0], point[1], point[2]};
      for (std::size_t i = 0; i < refine_param.size(); ++i) {
        const auto [lo, hi] = bounds_of(refine_param[i]);
        if (x[i] < lo || x[i] > hi)
          return -std::numeric_limits<double>::infinity();
        full[refine_param[i]] = x[i];
      }
      return value_at(full[0], full[1], full[2]);
    };
    std::vector<double> start;
    start.reserve(refine_param.size());
    for (int param : refine_param) start.push_back(point[param]);
    const Optimum optimum = refine(refine_objective, start);
    refine_evaluations = optimum.evaluations;
    converged = optimum.converged;
    for (std::size_t i = 0; i < refine_param.size(); ++i)
      point[refine_param[i]] = optimum.point[i];
  }

  SweepRow row;
  row.gamma = point[0];
  row.omega = point[1];
  row.phi = entangled ? 0.0 : point[2];
  row.delta = entangled ? opt.delta : 0.0;
  row.s = value_at(point[0], point[1], point[2]);
  row.provenance = Provenance::Analytic;

  KeyValues meta;
  meta.emplace_back("grid_evaluations", std::to_string(grid_evaluations));
  meta.emplace_back("refine_evaluations", std::to_string(refine_evaluations));
  meta.emplace_back("refine_converged", converged ? "true" : "false");
  const RunConfig config =
      make_config("optimize", opt, gamma.text, omega.text);
  with_output(opt.out_path, [&](std::ostream& out) {
    write_rows(out, format, config, {row}, meta);
  });
  return 0;
}

int run_verify_command(const CliOptions& opt) {
  const OutputFormat format = parse_format(opt.format_name);
  VerifyOptions options;
  options.tol = opt.tol;
  options.chi = opt.chi;
  if (opt.atom_rate_name == "sqrt2gamma") {
    options.atom_rate = CollapseAtomRate::SqrtTwoGamma;
  } else if (opt.atom_rate_name == "sqrt2kappa") {
    options.atom_rate = CollapseAtomRate::SqrtTwoKappa;
  } else {
    throw std::invalid_argument("unknown collapse-atom-rate: " +
                                opt.atom_rate_name);
  }
  const VerifyReport report = run_verification(options);
  const RunConfig config = make_config(
      "verify", opt,
      opt.gamma_text.empty() ? kGammaGridDefault : opt.gamma_text,
      opt.omega_text.empty() ? omega_grid_default() : opt.omega_text);
  with_output(opt.out_path, [&](std::ostream& out) {
    write_report(out, format, config, report.checks, report.notes);
  });
  return report.all_passed() ? 0 : 1;
}

int run_singlemode_command(const CliOptions& opt) {
  require_positive_tol(opt.tol);
  const OutputFormat format = parse_format(opt.format_name);
  const RangeSpec omega = parse_range(
      opt.omega_text.empty() ? format_exact(kPi / 4.0) : opt.omega_text);
  if (omega.values.size() != 1)
    throw std::invalid_argument("singlemode takes a single omega value");
  const MziParams mzi{omega.values.front(), opt.phi};
  std::vector<SingleModeRow> rows;
  rows.reserve(101);
  for (int i = 0; i <= 100; ++i) {
    const double abs_d = static_cast<double>(i) / 100.0;
    TwoPhotonState input;
    input.d = abs_d;
    input.e = std::sqrt(std::max(0.0, 1.0 - abs_d * abs_d));
    SingleModeRow row;
    row.abs_d = abs_d;
    row.s_at_unitary = std::norm(transform_two_photon(input, mzi).d);
    row.s_bound = antibunched_split_bound(abs_d);
    rows.push_back(row);
  }
  const RunConfig config = make_config("singlemode", opt, "-", omega.text);
  with_output(opt.out_path, [&](std::ostream& out) {
    write_singlemode_rows(out, format, config, rows);
  });
  return 0;
}

CLI::Option* add_common(CLI::App* sub, CliOptions& opt) {
  sub->add_option("--kind", opt.kind_name,
                  "system kind: unentangled | entangled")
      ->capture_default_str();
  sub->add_option("--gamma", opt.gamma_text,
                  "atom rate over kappa: <v> or <a:b:n>");
  sub->add_option("--omega", opt.omega_text,
                  "splitter angle: <v> or <a:b:n>");
  CLI::Option* phi =
      sub->add_option("--phi", opt.phi, "input phase")->capture_default_str();
  sub->add_option("--delta", opt.delta, "source decay rate over kappa")
      ->capture_default_str();
  sub->add_option("--chi", opt.chi, "source emission strength")
      ->capture_default_str();
  sub->add_option("--tol", opt.tol, "quadrature relative tolerance")
      ->capture_default_str();
  sub->add_option("--out", opt.out_path, "output path, - for stdout")
      ->capture_default_str();
  sub->add_option("--format", opt.format_name, "csv | json")
      ->capture_default_str();
  return phi;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Photon-pair splitting through an atom-cavity system followed by a "
      "tunable two-mode interferometer"};
  app.require_subcommand(1);
  CliOptions opt;

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "splitting efficiency over a gamma x omega grid");
  add_common(sweep_cmd, opt);
  CLI::App* slice_cmd = app.add_subcommand(
      "slice", "efficiency curve along one axis, the other pinned");
  add_common(slice_cmd, opt);
  CLI::App* optimize_cmd = app.add_subcommand(
      "optimize", "grid scan plus simplex refinement of the efficiency");
  CLI::Option* optimize_phi = add_common(optimize_cmd, opt);
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the invariant suite");
  add_common(verify_cmd, opt);
  verify_cmd->add_option("--collapse-atom-rate", opt.atom_rate_name,
                         "atom collapse coefficient: sqrt2gamma | sqrt2kappa "
                         "(the latter is a deliberately broken diagnostic)")
      ->capture_default_str();
  CLI::App* singlemode_cmd = app.add_subcommand(
      "singlemode", "single-mode split probabilities and bounds");
  add_common(singlemode_cmd, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(sweep_cmd)) return run_sweep_command(opt, false);
    if (app.got_subcommand(slice_cmd)) return run_sweep_command(opt, true);
    if (app.got_subcommand(optimize_cmd))
      return run_optimize_command(opt, optimize_phi->count() > 0);
    if (app.got_subcommand(verify_cmd)) return run_verify_command(opt);
    if (app.got_subcommand(singlemode_cmd))
      return run_singlemode_command(opt);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid config: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
