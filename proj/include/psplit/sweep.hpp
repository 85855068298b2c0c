#pragma once

#include "psplit/efficiency.hpp"

#include <vector>

namespace psplit {

// Tensor grid of splitting-efficiency evaluations over gamma x omega with
// phi and delta fixed per run.  A slice is a sweep with one value on an axis.
struct SweepRequest {
  SystemKind kind = SystemKind::Unentangled;
  std::vector<double> gamma_values;
  std::vector<double> omega_values;
  double phi = 0.0;
  double delta = 0.0;
  double chi = 1e-3;  // numeric entangled runs only
  Provenance provenance = Provenance::Analytic;
  QuadratureSettings quad;

  void validate() const;  // throws std::invalid_argument
};

struct SweepRow {
  double gamma = 0.0;
  double omega = 0.0;
  double phi = 0.0;
  double delta = 0.0;
  double s = 0.0;
  Provenance provenance = Provenance::Analytic;
};

// Rows in row-major order (gamma outer, omega inner).  Points are evaluated
// in parallel when OpenMP is enabled; a point whose evaluation throws gets
// s = NaN.  run_sweep_serial is the single-threaded reference: it must
// produce bit-identical rows and exists as the comparison baseline.
std::vector<SweepRow> run_sweep(const SweepRequest& request);
std::vector<SweepRow> run_sweep_serial(const SweepRequest& request);

}  // namespace psplit
