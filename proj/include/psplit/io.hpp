#pragma once

#include "psplit/sweep.hpp"
#include "psplit/verify.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace psplit {

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(const std::string& name);  // "csv" | "json"
std::string to_string(OutputFormat format);
SystemKind parse_kind(const std::string& name);  // "unentangled" | "entangled"
std::string to_string(SystemKind kind);
Provenance parse_provenance(const std::string& name);  // "analytic"|"numeric"

// Everything needed to reproduce a run; echoed verbatim into every output.
struct RunConfig {
  std::string command;
  std::string kind;
  std::string gamma_spec;
  std::string omega_spec;
  double phi = 0.0;
  double delta = 0.0;
  double chi = 0.0;
  double tol = 0.0;
  std::string provenance;
  std::string format;
  std::string out_path;
};

// Shared fixed float formatting: 12 significant digits.
std::string format_number(double value);

using KeyValues = std::vector<std::pair<std::string, std::string>>;

// Row table (sweep/slice/optimize outputs).  CSV: '#'-prefixed config echo
// and meta block, header line, one row per line.  JSON: object with config,
// meta, and rows arrays carrying the same field names.
void write_rows(std::ostream& out, OutputFormat format,
                const RunConfig& config, const std::vector<SweepRow>& rows,
                const KeyValues& meta = {});

// Check report (verify output): config echo, PASS/FAIL line per check,
// free-form notes, and a summary line; JSON mirror with the same content.
void write_report(std::ostream& out, OutputFormat format,
                  const RunConfig& config,
                  const std::vector<CheckResult>& checks,
                  const std::vector<std::string>& notes);

// Single-mode interference table: attained split probability of the
// antibunched input d|11> + sqrt(1-d^2)|20> at the configured unitary,
// next to its attainable ceiling (1 + d^2)/2.
struct SingleModeRow {
  double abs_d = 0.0;
  double s_at_unitary = 0.0;
  double s_bound = 0.0;
};

void write_singlemode_rows(std::ostream& out, OutputFormat format,
                           const RunConfig& config,
                           const std::vector<SingleModeRow>& rows);

}  // namespace psplit
