#include "psplit/io.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace psplit {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json config_json(const RunConfig& config) {
  ordered_json j;
  j["command"] = config.command;
  j["kind"] = config.kind;
  j["gamma"] = config.gamma_spec;
  j["omega"] = config.omega_spec;
  j["phi"] = config.phi;
  j["delta"] = config.delta;
  j["chi"] = config.chi;
  j["tol"] = config.tol;
  j["provenance"] = config.provenance;
  j["format"] = config.format;
  j["out"] = config.out_path;
  return j;
}

void write_config_block(std::ostream& out, const RunConfig& config,
                        const KeyValues& meta) {
  out << "# command = " << config.command << '\n';
  out << "# kind = " << config.kind << '\n';
  out << "# gamma = " << config.gamma_spec << '\n';
  out << "# omega = " << config.omega_spec << '\n';
  out << "# phi = " << format_number(config.phi) << '\n';
  out << "# delta = " << format_number(config.delta) << '\n';
  out << "# chi = " << format_number(config.chi) << '\n';
  out << "# tol = " << format_number(config.tol) << '\n';
  out << "# provenance = " << config.provenance << '\n';
  out << "# format = " << config.format << '\n';
  out << "# out = " << config.out_path << '\n';
  for (const auto& [key, value] : meta)
    out << "# " << key << " = " << value << '\n';
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format: " + name);
}

std::string to_string(OutputFormat format) {
  return format == OutputFormat::Csv ? "csv" : "json";
}

SystemKind parse_kind(const std::string& name) {
  if (name == "unentangled") return SystemKind::Unentangled;
  if (name == "entangled") return SystemKind::Entangled;
  throw std::invalid_argument("unknown system kind: " + name);
}

std::string to_string(SystemKind kind) {
  return kind == SystemKind::Unentangled ? "unentangled" : "entangled";
}

Provenance parse_provenance(const std::string& name) {
  if (name == "analytic") return Provenance::Analytic;
  if (name == "numeric") return Provenance::Numeric;
  throw std::invalid_argument("unknown provenance: " + name);
}

std::string format_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

void write_rows(std::ostream& out, OutputFormat format,
                const RunConfig& config, const std::vector<SweepRow>& rows,
                const KeyValues& meta) {
  if (format == OutputFormat::Csv) {
    write_config_block(out, config, meta);
    out << "gamma_over_kappa,omega,phi,delta,S,provenance\n";
    for (const SweepRow& row : rows) {
      out << format_number(row.gamma) << ',' << format_number(row.omega)
          << ',' << format_number(row.phi) << ',' << format_number(row.delta)
          << ',' << format_number(row.s) << ',' << to_string(row.provenance)
          << '\n';
    }
    return;
  }
  ordered_json j;
  j["config"] = config_json(config);
  if (!meta.empty()) {
    ordered_json m;
    for (const auto& [key, value] : meta) m[key] = value;
    j["meta"] = m;
  }
  ordered_json out_rows = ordered_json::array();
  for (const SweepRow& row : rows) {
    ordered_json r;
    r["gamma_over_kappa"] = row.gamma;
    r["omega"] = row.omega;
    r["phi"] = row.phi;
    r["delta"] = row.delta;
    r["S"] = row.s;
    r["provenance"] = to_string(row.provenance);
    out_rows.push_back(std::move(r));
  }
  j["rows"] = std::move(out_rows);
  out << j.dump(2) << '\n';
}

void write_singlemode_rows(std::ostream& out, OutputFormat format,
                           const RunConfig& config,
                           const std::vector<SingleModeRow>& rows) {
  if (format == OutputFormat::Csv) {
    write_config_block(out, config, {});
    out << "abs_d,S_at_unitary,S_bound,provenance\n";
    for (const SingleModeRow& row : rows) {
      out << format_number(row.abs_d) << ',' << format_number(row.s_at_unitary)
          << ',' << format_number(row.s_bound) << ",analytic\n";
    }
    return;
  }
  ordered_json j;
  j["config"] = config_json(config);
  ordered_json out_rows = ordered_json::array();
  for (const SingleModeRow& row : rows) {
    ordered_json r;
    r["abs_d"] = row.abs_d;
    r["S_at_unitary"] = row.s_at_unitary;
    r["S_bound"] = row.s_bound;
    r["provenance"] = "analytic";
    out_rows.push_back(std::move(r));
  }
  j["rows"] = std::move(out_rows);
  out << j.dump(2) << '\n';
}

void write_report(std::ostream& out, OutputFormat format,
                  const RunConfig& config,
                  const std::vector<CheckResult>& checks,
                  const std::vector<std::string>& notes) {
  std::size_t passed = 0;
  for (const CheckResult& check : checks) passed += check.pass ? 1 : 0;
  if (format == OutputFormat::Csv) {
    write_config_block(out, config, {});
    for (const CheckResult& check : checks)
      out << (check.pass ? "PASS " : "FAIL ") << check.name << " — "
          << check.detail << '\n';
    for (const std::string& note : notes) out << "note: " << note << '\n';
    out << "verification: " << passed << '/' << checks.size()
        << " checks passed\n";
    return;
  }
  ordered_json j;
  j["config"] = config_json(config);
  ordered_json check_rows = ordered_json::array();
  for (const CheckResult& check : checks) {
    ordered_json c;
    c["name"] = check.name;
    c["pass"] = check.pass;
    c["detail"] = check.detail;
    check_rows.push_back(std::move(c));
  }
  j["checks"] = std::move(check_rows);
  j["notes"] = notes;
  j["passed"] = passed;
  j["total"] = checks.size();
  out << j.dump(2) << '\n';
}

}  // namespace psplit
